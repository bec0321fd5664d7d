#pragma once

#include "samelson/numeric.hpp"

#include <vector>

namespace samelson {

// Polynomial truncation of a power series in t: coefficients for degrees
// 0..cap, with t^{cap+1} = 0. Models classes in H*(CP^m) = Z[t]/(t^{m+1}).
struct TruncatedSeries {
    unsigned cap = 0;
    std::vector<Rational> coeffs;  // size cap + 1, indexed by degree

    bool operator==(const TruncatedSeries&) const = default;
};

// c_q(j): the degree-q coefficient of ch(x^j) = (e^t - 1)^j, where x = H - 1
// generates reduced K-theory of complex projective space. Closed form
// j!·S(q,j)/q!; in particular c_j(j) = 1 and c_q(j) = 0 for q < j.
Rational chern_coeff(unsigned j, unsigned q);

// ch(x^j) truncated at degree cap.
TruncatedSeries chern_series(unsigned j, unsigned cap);

// Cauchy product truncated at cap. Operand coefficients beyond their own cap
// are treated as zero, so a constant-1 series of cap 0 is a usable identity.
TruncatedSeries series_mul(const TruncatedSeries& s1, const TruncatedSeries& s2,
                           unsigned cap);

}  // namespace samelson
