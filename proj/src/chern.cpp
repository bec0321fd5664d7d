#include "samelson/chern.hpp"

namespace samelson {

Rational chern_coeff(unsigned j, unsigned q) {
    if (j < 1) {
        throw std::invalid_argument("chern_coeff: j must be >= 1");
    }
    return make_rational(factorial(j) * stirling2(q, j), factorial(q));
}

TruncatedSeries chern_series(unsigned j, unsigned cap) {
    if (j < 1 || cap < 1) {
        throw std::invalid_argument("chern_series: j and cap must be >= 1");
    }
    TruncatedSeries s;
    s.cap = cap;
    s.coeffs.reserve(cap + 1);
    for (unsigned q = 0; q <= cap; ++q) {
        s.coeffs.push_back(chern_coeff(j, q));
    }
    return s;
}

TruncatedSeries series_mul(const TruncatedSeries& s1, const TruncatedSeries& s2,
                           unsigned cap) {
    TruncatedSeries r;
    r.cap = cap;
    r.coeffs.assign(cap + 1, Rational(0));
    for (unsigned d = 0; d <= cap; ++d) {
        Rational sum = 0;
        for (unsigned t = 0; t <= d; ++t) {
            if (t > s1.cap || d - t > s2.cap) {
                continue;
            }
            sum += s1.coeffs[t] * s2.coeffs[d - t];
        }
        r.coeffs[d] = sum;
    }
    return r;
}

}  // namespace samelson
