#pragma once

#include "samelson/numeric.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace samelson {

struct DimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Thrown by minimal_multiple when the target vector is outside the rational
// column span, i.e. no multiple of it ever lands in the lattice.
struct InfiniteOrder : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Dense matrix of exact integers. Zero rows (or columns) are legal so that
// degenerate generator matrices (empty row basis) need no special casing.
class IntegerMatrix {
  public:
    IntegerMatrix() = default;
    IntegerMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static IntegerMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Integer& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Integer& at(std::size_t r, std::size_t c) const {
        return data_[r * cols_ + c];
    }

    std::vector<Integer> col(std::size_t c) const;

    void swap_cols(std::size_t c1, std::size_t c2);
    void swap_rows(std::size_t r1, std::size_t r2);
    void negate_col(std::size_t c);
    void negate_row(std::size_t r);
    // col(dst) += f * col(src); row variant likewise.
    void add_col(std::size_t dst, std::size_t src, const Integer& f);
    void add_row(std::size_t dst, std::size_t src, const Integer& f);

    bool operator==(const IntegerMatrix&) const = default;

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Integer> data_;
};

std::vector<Integer> mat_vec(const IntegerMatrix& A, const std::vector<Integer>& y);
IntegerMatrix mat_mul(const IntegerMatrix& A, const IntegerMatrix& B);

// Exact determinant (fraction-free Bareiss elimination); empty matrix -> 1.
Integer determinant(const IntegerMatrix& A);

// U·A·V = S with U, V unimodular; S diagonal, s_1 | s_2 | ... | s_rank > 0.
struct SNFDecomposition {
    IntegerMatrix U, S, V;
    std::size_t rank = 0;
};

// A·V = H with V unimodular; H is the column-style Hermite normal form.
struct HNFDecomposition {
    IntegerMatrix H, V;
};

struct MinimalMultipleResult {
    Integer d;
    std::vector<Integer> certificate;  // A·certificate = d·v
};

// Column-style Hermite normal form: same column lattice, echelon shape,
// positive pivots, entries left of each pivot in its row reduced into
// [0, pivot).
IntegerMatrix hnf(const IntegerMatrix& A);
HNFDecomposition hnf_with_transform(const IntegerMatrix& A);

// Smallest-magnitude pivoting; entries stay exact so no fraction-free or
// modular tricks are needed at the sizes in scope.
SNFDecomposition snf(const IntegerMatrix& A);

// Certificate y with A·y = w when w lies in the column lattice, otherwise
// empty. Greedy reduction of w against the HNF pivots.
std::optional<std::vector<Integer>> membership(const IntegerMatrix& A,
                                               const std::vector<Integer>& w);
// Same, against a precomputed decomposition (for tight oracle loops).
std::optional<std::vector<Integer>> membership(const HNFDecomposition& hd,
                                               const std::vector<Integer>& w);

// Least d >= 1 with d·v in the column lattice of A, with certificate.
// Via SNF: w = U·v must vanish beyond the rank (else InfiniteOrder), and
// d = lcm_i s_i / gcd(s_i, w_i). The defining equation A·y = d·v is
// re-verified before returning.
MinimalMultipleResult minimal_multiple(const IntegerMatrix& A,
                                       const std::vector<Integer>& v);

}  // namespace samelson
