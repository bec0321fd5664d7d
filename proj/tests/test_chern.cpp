#include "samelson/chern.hpp"

#include <doctest.h>

using namespace samelson;

TEST_CASE("chern_coeff examples") {
    CHECK(chern_coeff(1, 2) == make_rational(1, 2));
    CHECK(chern_coeff(2, 2) == 1);
    CHECK(chern_coeff(2, 3) == 1);
    CHECK(chern_coeff(2, 4) == make_rational(7, 12));
    CHECK(chern_coeff(3, 2) == 0);
    CHECK(chern_coeff(1, 0) == 0);  // ch(x) = e^t - 1 has no constant term
    CHECK_THROWS_AS(chern_coeff(0, 3), std::invalid_argument);
}

TEST_CASE("chern_coeff leading term and vanishing") {
    for (unsigned j = 1; j <= 12; ++j) {
        CHECK(chern_coeff(j, j) == 1);
        for (unsigned q = 0; q < j; ++q) {
            CHECK(chern_coeff(j, q) == 0);
        }
    }
}

TEST_CASE("chern_coeff alternating-sum oracle") {
    // Degree-q coefficient of (e^t-1)^j expanded over e^{kt}:
    // (1/q!) sum_k (-1)^{j-k} C(j,k) k^q.
    for (unsigned j = 1; j <= 8; ++j) {
        for (unsigned q = 0; q <= 10; ++q) {
            Integer sum = 0;
            for (unsigned k = 0; k <= j; ++k) {
                Integer term = binomial(j, k) * pow(Integer(k), q);
                sum += ((j - k) % 2 == 0) ? term : -term;
            }
            CAPTURE(j);
            CAPTURE(q);
            CHECK(chern_coeff(j, q) == make_rational(sum, factorial(q)));
        }
    }
}

TEST_CASE("chern_series examples") {
    TruncatedSeries s12 = chern_series(1, 2);
    CHECK(s12.cap == 2);
    CHECK(s12.coeffs ==
          std::vector<Rational>{0, 1, make_rational(1, 2)});

    TruncatedSeries s22 = chern_series(2, 2);
    CHECK(s22.coeffs == std::vector<Rational>{0, 0, 1});

    TruncatedSeries s24 = chern_series(2, 4);
    CHECK(s24.coeffs ==
          std::vector<Rational>{0, 0, 1, 1, make_rational(7, 12)});
    CHECK(s24.coeffs.size() == s24.cap + 1);

    CHECK_THROWS_AS(chern_series(0, 4), std::invalid_argument);
}

TEST_CASE("series_mul examples") {
    TruncatedSeries t{1, {0, 1}};  // the series t truncated at degree 1
    TruncatedSeries tt = series_mul(t, t, 2);
    CHECK(tt.cap == 2);
    CHECK(tt.coeffs == std::vector<Rational>{0, 0, 1});

    // ch(x)·ch(x) = ch(x²) within the cap.
    TruncatedSeries x = chern_series(1, 4);
    TruncatedSeries xx = series_mul(x, x, 4);
    CHECK(xx.coeffs == chern_series(2, 4).coeffs);

    // Multiplicative identity truncates the other factor.
    TruncatedSeries one{0, {1}};
    TruncatedSeries same = series_mul(x, one, 4);
    CHECK(same.coeffs == x.coeffs);
    TruncatedSeries shorter = series_mul(x, one, 2);
    CHECK(shorter.coeffs == std::vector<Rational>(x.coeffs.begin(),
                                                  x.coeffs.begin() + 3));
}

TEST_CASE("chern multiplicativity for i+j <= 8, cap <= 10") {
    for (unsigned cap = 1; cap <= 10; ++cap) {
        for (unsigned i = 1; i <= 7; ++i) {
            for (unsigned j = 1; i + j <= 8; ++j) {
                TruncatedSeries lhs =
                    series_mul(chern_series(i, cap), chern_series(j, cap), cap);
                CAPTURE(i);
                CAPTURE(j);
                CAPTURE(cap);
                CHECK(lhs.coeffs == chern_series(i + j, cap).coeffs);
            }
        }
    }
}
