#pragma once

#include "samelson/core.hpp"

#include <string>
#include <vector>

namespace samelson {

// One printed generator column, transcribed exactly (e.g. "½4!" stored as
// 12, "5/24·7!" as 1050). Lemma 2.10ii values are as printed, i.e. already
// odd-localized.
struct PaperColumn {
    unsigned i = 0, j = 0;  // generator indices
    std::string label;      // printed name, e.g. "α_{1,2}" or "α_1"
    std::vector<Rational> values;
};

struct PaperTable {
    std::string id;  // "Lemma 2.3", ..., "Lemma 3.8-beta"
    ProductProblem problem;
    std::vector<PaperColumn> columns;
    std::string note;  // documented finding carried verbatim, if any
};

enum class MatchStatus { MATCH_EXACT, MATCH_2LOCAL, MISMATCH };

// Per-column audit of a printed table against recomputation.
// MATCH_2LOCAL means printed = sign · 2^s · recomputed uniformly across all
// nonzero entries with identical zero patterns (s may be negative: localized
// tables print the smaller values). MISMATCH lists the disagreeing rows.
struct ColumnComparison {
    unsigned i = 0, j = 0;
    std::string label;
    MatchStatus status = MatchStatus::MISMATCH;
    int sign = +1;  // MATCH_2LOCAL only
    long s = 0;     // MATCH_2LOCAL only
    std::vector<RowIndex> mismatch_rows;  // MISMATCH only
};

struct ComparisonReport {
    std::string table_id;
    std::vector<ColumnComparison> columns;
    std::string note;
};

// All eight printed tables: Lemma 2.3, 2.7, 2.10i, 2.10ii, 3.3, 3.5,
// 3.8-alpha, 3.8-beta.
const std::vector<PaperTable>& fixtures();

ComparisonReport compare(const PaperTable& table);

// Classification of one printed column against its recomputation; `rows`
// labels mismatch positions. Depends only on the paired entries, never on
// their order (checked by the permutation-invariance property tests).
ColumnComparison classify_column(const PaperColumn& col,
                                 const std::vector<Integer>& recomputed,
                                 const std::vector<RowIndex>& rows);

// "MATCH_EXACT" | "MATCH_2LOCAL(+, -2)" | "MISMATCH rows (1,3),(2,3)"
std::string format_status(const ColumnComparison& c);

}  // namespace samelson
