#include "samelson/lattice.hpp"

#include <algorithm>

namespace samelson {

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
    IntegerMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m.at(i, i) = 1;
    }
    return m;
}

std::vector<Integer> IntegerMatrix::col(std::size_t c) const {
    std::vector<Integer> v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        v[r] = at(r, c);
    }
    return v;
}

void IntegerMatrix::swap_cols(std::size_t c1, std::size_t c2) {
    if (c1 == c2) {
        return;
    }
    for (std::size_t r = 0; r < rows_; ++r) {
        std::swap(at(r, c1), at(r, c2));
    }
}

void IntegerMatrix::swap_rows(std::size_t r1, std::size_t r2) {
    if (r1 == r2) {
        return;
    }
    for (std::size_t c = 0; c < cols_; ++c) {
        std::swap(at(r1, c), at(r2, c));
    }
}

void IntegerMatrix::negate_col(std::size_t c) {
    for (std::size_t r = 0; r < rows_; ++r) {
        at(r, c) = -at(r, c);
    }
}

void IntegerMatrix::negate_row(std::size_t r) {
    for (std::size_t c = 0; c < cols_; ++c) {
        at(r, c) = -at(r, c);
    }
}

void IntegerMatrix::add_col(std::size_t dst, std::size_t src, const Integer& f) {
    for (std::size_t r = 0; r < rows_; ++r) {
        at(r, dst) += f * at(r, src);
    }
}

void IntegerMatrix::add_row(std::size_t dst, std::size_t src, const Integer& f) {
    for (std::size_t c = 0; c < cols_; ++c) {
        at(dst, c) += f * at(src, c);
    }
}

std::vector<Integer> mat_vec(const IntegerMatrix& A, const std::vector<Integer>& y) {
    if (y.size() != A.cols()) {
        throw DimensionMismatch("mat_vec: vector length != column count");
    }
    std::vector<Integer> r(A.rows());
    for (std::size_t i = 0; i < A.rows(); ++i) {
        Integer s = 0;
        for (std::size_t j = 0; j < A.cols(); ++j) {
            s += A.at(i, j) * y[j];
        }
        r[i] = s;
    }
    return r;
}

IntegerMatrix mat_mul(const IntegerMatrix& A, const IntegerMatrix& B) {
    if (A.cols() != B.rows()) {
        throw DimensionMismatch("mat_mul: inner dimensions disagree");
    }
    IntegerMatrix C(A.rows(), B.cols());
    for (std::size_t i = 0; i < A.rows(); ++i) {
        for (std::size_t k = 0; k < A.cols(); ++k) {
            if (A.at(i, k) == 0) {
                continue;
            }
            for (std::size_t j = 0; j < B.cols(); ++j) {
                C.at(i, j) += A.at(i, k) * B.at(k, j);
            }
        }
    }
    return C;
}

Integer determinant(const IntegerMatrix& A) {
    if (A.rows() != A.cols()) {
        throw DimensionMismatch("determinant: matrix not square");
    }
    std::size_t n = A.rows();
    if (n == 0) {
        return 1;
    }
    // Bareiss: every division below is exact.
    IntegerMatrix M = A;
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (M.at(k, k) == 0) {
            std::size_t swap_with = k;
            for (std::size_t r = k + 1; r < n; ++r) {
                if (M.at(r, k) != 0) {
                    swap_with = r;
                    break;
                }
            }
            if (swap_with == k) {
                return 0;
            }
            M.swap_rows(k, swap_with);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                M.at(i, j) =
                    (M.at(i, j) * M.at(k, k) - M.at(i, k) * M.at(k, j)) / prev;
            }
            M.at(i, k) = 0;
        }
        prev = M.at(k, k);
    }
    return sign * M.at(n - 1, n - 1);
}

namespace {

// Floor quotient; the remainder a - b·fdiv(a,b) lies in [0, |b|) for b > 0.
Integer fdiv(const Integer& a, const Integer& b) {
    Integer q = a / b;
    if (a % b != 0 && ((a < 0) != (b < 0))) {
        --q;
    }
    return q;
}

}  // namespace

HNFDecomposition hnf_with_transform(const IntegerMatrix& A) {
    HNFDecomposition hd{A, IntegerMatrix::identity(A.cols())};
    IntegerMatrix& H = hd.H;
    IntegerMatrix& V = hd.V;
    std::size_t cur = 0;
    for (std::size_t r = 0; r < H.rows() && cur < H.cols(); ++r) {
        // Shrink the entries of row r right of cur by repeated gcd steps.
        for (;;) {
            std::size_t best = H.cols();
            for (std::size_t j = cur; j < H.cols(); ++j) {
                if (H.at(r, j) != 0 &&
                    (best == H.cols() || abs(H.at(r, j)) < abs(H.at(r, best)))) {
                    best = j;
                }
            }
            if (best == H.cols()) {
                break;  // row has no pivot; next row keeps the same cur
            }
            H.swap_cols(cur, best);
            V.swap_cols(cur, best);
            bool clean = true;
            for (std::size_t j = cur + 1; j < H.cols(); ++j) {
                if (H.at(r, j) == 0) {
                    continue;
                }
                Integer q = fdiv(H.at(r, j), H.at(r, cur));
                H.add_col(j, cur, -q);
                V.add_col(j, cur, -q);
                if (H.at(r, j) != 0) {
                    clean = false;
                }
            }
            if (clean) {
                break;
            }
        }
        if (H.at(r, cur) == 0) {
            continue;
        }
        if (H.at(r, cur) < 0) {
            H.negate_col(cur);
            V.negate_col(cur);
        }
        // Reduce earlier columns at this pivot row into [0, pivot).
        for (std::size_t j = 0; j < cur; ++j) {
            Integer q = fdiv(H.at(r, j), H.at(r, cur));
            if (q != 0) {
                H.add_col(j, cur, -q);
                V.add_col(j, cur, -q);
            }
        }
        ++cur;
    }
    return hd;
}

IntegerMatrix hnf(const IntegerMatrix& A) { return hnf_with_transform(A).H; }

SNFDecomposition snf(const IntegerMatrix& A) {
    SNFDecomposition d{IntegerMatrix::identity(A.rows()), A,
                       IntegerMatrix::identity(A.cols()), 0};
    IntegerMatrix& S = d.S;
    IntegerMatrix& U = d.U;
    IntegerMatrix& V = d.V;
    const std::size_t nr = S.rows(), nc = S.cols();
    std::size_t t = 0;
    while (t < nr && t < nc) {
        // Smallest-magnitude nonzero entry of the trailing submatrix -> (t,t).
        std::size_t pr = nr, pc = nc;
        for (std::size_t r = t; r < nr; ++r) {
            for (std::size_t c = t; c < nc; ++c) {
                if (S.at(r, c) != 0 &&
                    (pr == nr || abs(S.at(r, c)) < abs(S.at(pr, pc)))) {
                    pr = r;
                    pc = c;
                }
            }
        }
        if (pr == nr) {
            break;  // submatrix is zero
        }
        S.swap_rows(t, pr);
        U.swap_rows(t, pr);
        S.swap_cols(t, pc);
        V.swap_cols(t, pc);

        bool dirty = false;
        for (std::size_t r = t + 1; r < nr; ++r) {
            if (S.at(r, t) == 0) {
                continue;
            }
            Integer q = S.at(r, t) / S.at(t, t);
            if (q != 0) {
                S.add_row(r, t, -q);
                U.add_row(r, t, -q);
            }
            if (S.at(r, t) != 0) {
                dirty = true;  // remainder smaller than pivot; re-pivot
            }
        }
        for (std::size_t c = t + 1; c < nc; ++c) {
            if (S.at(t, c) == 0) {
                continue;
            }
            Integer q = S.at(t, c) / S.at(t, t);
            if (q != 0) {
                S.add_col(c, t, -q);
                V.add_col(c, t, -q);
            }
            if (S.at(t, c) != 0) {
                dirty = true;
            }
        }
        if (dirty) {
            continue;
        }
        // Row and column t are clear. Enforce the divisibility chain: the
        // pivot must divide the whole remaining submatrix, else fold the
        // offending row in and re-run this pivot.
        bool fixed = false;
        for (std::size_t r = t + 1; r < nr && !fixed; ++r) {
            for (std::size_t c = t + 1; c < nc && !fixed; ++c) {
                if (S.at(r, c) % S.at(t, t) != 0) {
                    S.add_row(t, r, 1);
                    U.add_row(t, r, 1);
                    fixed = true;
                }
            }
        }
        if (fixed) {
            continue;
        }
        if (S.at(t, t) < 0) {
            S.negate_row(t);
            U.negate_row(t);
        }
        ++t;
    }
    d.rank = t;
    return d;
}

std::optional<std::vector<Integer>> membership(const HNFDecomposition& hd,
                                               const std::vector<Integer>& w) {
    const IntegerMatrix& H = hd.H;
    if (w.size() != H.rows()) {
        throw DimensionMismatch("membership: vector length != row count");
    }
    std::vector<Integer> res = w;
    std::vector<Integer> z(H.cols(), Integer(0));
    std::size_t cur = 0;
    for (std::size_t r = 0; r < H.rows(); ++r) {
        if (cur < H.cols() && H.at(r, cur) != 0) {
            if (res[r] % H.at(r, cur) != 0) {
                return std::nullopt;
            }
            Integer q = res[r] / H.at(r, cur);
            if (q != 0) {
                for (std::size_t i = r; i < H.rows(); ++i) {
                    res[i] -= q * H.at(i, cur);
                }
            }
            z[cur] = q;
            ++cur;
        } else if (res[r] != 0) {
            return std::nullopt;  // row without pivot cannot be corrected
        }
    }
    return mat_vec(hd.V, z);
}

std::optional<std::vector<Integer>> membership(const IntegerMatrix& A,
                                               const std::vector<Integer>& w) {
    if (w.size() != A.rows()) {
        throw DimensionMismatch("membership: vector length != row count");
    }
    return membership(hnf_with_transform(A), w);
}

MinimalMultipleResult minimal_multiple(const IntegerMatrix& A,
                                       const std::vector<Integer>& v) {
    if (v.size() != A.rows()) {
        throw DimensionMismatch("minimal_multiple: vector length != row count");
    }
    SNFDecomposition dec = snf(A);
    std::vector<Integer> w = mat_vec(dec.U, v);
    for (std::size_t i = dec.rank; i < w.size(); ++i) {
        if (w[i] != 0) {
            throw InfiniteOrder(
                "minimal_multiple: target outside the rational column span");
        }
    }
    Integer d = 1;
    for (std::size_t i = 0; i < dec.rank; ++i) {
        const Integer& s = dec.S.at(i, i);
        d = lcm(d, s / gcd(s, w[i]));
    }
    std::vector<Integer> z(A.cols(), Integer(0));
    for (std::size_t i = 0; i < dec.rank; ++i) {
        z[i] = d * w[i] / dec.S.at(i, i);  // exact by choice of d
    }
    MinimalMultipleResult result{d, mat_vec(dec.V, z)};
    // The defining equation is cheap to re-check and everything downstream
    // leans on it.
    std::vector<Integer> lhs = mat_vec(A, result.certificate);
    for (std::size_t i = 0; i < lhs.size(); ++i) {
        if (lhs[i] != d * v[i]) {
            throw std::logic_error("minimal_multiple: certificate failed to verify");
        }
    }
    return result;
}

}  // namespace samelson
