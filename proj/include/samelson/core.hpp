#pragma once

#include "samelson/chern.hpp"
#include "samelson/lattice.hpp"

#include <utility>
#include <vector>

namespace samelson {

struct InvalidProblem : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// One Samelson-product order computation: the product
// <eps_{a,n}, eps_{b,n}> : SigmaCP^a ^ SigmaCP^b -> SU(n), with a, b < n.
struct ProductProblem {
    unsigned a = 0, b = 0, n = 0;

    int k() const { return int(a) + int(b) - int(n); }

    bool operator==(const ProductProblem&) const = default;
};

// Throws InvalidProblem naming the violated constraint.
void validate(const ProductProblem& problem);

// Basis element sigma^2(t^p (x) t^q) of H^{2m} of the smash, m = p+q+1.
// The detection map sees exactly the degrees with n-1 <= p+q <= a+b.
struct RowIndex {
    unsigned p = 0, q = 0;

    unsigned m() const { return p + q + 1; }

    bool operator==(const RowIndex&) const = default;
};

// The image lattice of the detection map: columns are indexed by the
// K-theory generators zeta_1 (x) x^i (x) x^j, rows by RowIndex, and
// entry((p,q),(i,j)) = m!·c_p(i)·c_q(j), which is always an integer.
struct GeneratorMatrix {
    ProductProblem problem;
    std::vector<RowIndex> row_basis;
    std::vector<std::pair<unsigned, unsigned>> col_basis;  // (i,j), lex
    IntegerMatrix matrix;
};

using TargetVector = std::vector<Integer>;

// Where the detection method is actually guaranteed: IN_RANGE for
// 0 <= k <= n-1, BOUNDARY_KM1 for the classical k = -1 setting, and
// OUT_OF_METHOD_RANGE otherwise (reported, not refused).
enum class Validity { IN_RANGE, BOUNDARY_KM1, OUT_OF_METHOD_RANGE };

const char* to_string(Validity v);

struct OrderResult {
    Integer d_integral;         // minimal d with d·(1,...,1) in the lattice
    Integer d_odd;              // odd part: the odd-primary order
    Factorization factorization;  // of d_odd
    std::vector<Integer> certificate;  // matrix · certificate = d_integral · 1
    Validity validity = Validity::OUT_OF_METHOD_RANGE;
};

// All (p,q), 1 <= p <= a, 1 <= q <= b, p+q >= n-1, sorted lexicographically.
// This order matches the component order of the printed tables (Lemmas 2.3,
// 2.7, 2.10, 3.3, 3.5, 3.8).
std::vector<RowIndex> row_basis(const ProductProblem& problem);

GeneratorMatrix generator_matrix(const ProductProblem& problem);

// All-ones vector over the row basis.
TargetVector target_vector(const ProductProblem& problem);

// The odd-primary order of the Samelson product: minimal multiple of the
// all-ones target inside the generator lattice, with the 2-part discarded
// afterwards. The integral d is kept as a diagnostic.
OrderResult samelson_order(const ProductProblem& problem);

}  // namespace samelson
