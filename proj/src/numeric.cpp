#include "samelson/numeric.hpp"

#include <sstream>
#include <utility>
#include <vector>

namespace samelson {

Rational make_rational(Integer num, Integer den) {
    if (den == 0) {
        throw std::invalid_argument("make_rational: zero denominator");
    }
    if (den < 0) {  // cpp_rational's own (num, den) ctor rejects this case
        num = -num;
        den = -den;
    }
    return Rational(std::move(num), std::move(den));
}

Integer factorial(unsigned n) {
    Integer r = 1;
    for (unsigned i = 2; i <= n; ++i) {
        r *= i;
    }
    return r;
}

Integer binomial(unsigned n, unsigned k) {
    if (k > n) {
        return 0;
    }
    if (k > n - k) {
        k = n - k;
    }
    Integer r = 1;
    for (unsigned i = 1; i <= k; ++i) {  // exact at every step
        r = r * (n - k + i) / i;
    }
    return r;
}

Integer stirling2(unsigned q, unsigned j) {
    if (j > q) {
        return 0;
    }
    // Triangle DP on S(q,j) = j·S(q-1,j) + S(q-1,j-1).
    std::vector<Integer> row(j + 1);
    row[0] = 1;
    for (unsigned qq = 1; qq <= q; ++qq) {
        unsigned hi = std::min(qq, j);
        for (unsigned jj = hi; jj >= 1; --jj) {
            row[jj] = jj * row[jj] + row[jj - 1];
        }
        row[0] = 0;
    }
    return row[j];
}

bool is_prime(const Integer& p) {
    if (p < 2) {
        return false;
    }
    if (p % 2 == 0) {
        return p == 2;
    }
    for (Integer d = 3; d * d <= p; d += 2) {
        if (p % d == 0) {
            return false;
        }
    }
    return true;
}

unsigned p_valuation(const Integer& p, const Integer& x) {
    if (x == 0) {
        throw ZeroInput("p_valuation: x must be nonzero");
    }
    if (!is_prime(p)) {
        std::ostringstream msg;
        msg << "p_valuation: " << p << " is not prime";
        throw NotPrime(msg.str());
    }
    Integer y = abs(x);
    unsigned r = 0;
    while (y % p == 0) {
        y /= p;
        ++r;
    }
    return r;
}

Integer odd_part(const Integer& x) {
    if (x < 1) {
        throw std::invalid_argument("odd_part: input must be >= 1");
    }
    Integer y = x;
    while (y % 2 == 0) {
        y /= 2;
    }
    return y;
}

Factorization factor_odd(const Integer& x) {
    Integer y = odd_part(x);  // validates x >= 1
    Factorization f;
    for (Integer d = 3; d * d <= y; d += 2) {
        while (y % d == 0) {
            y /= d;
            ++f[d];
        }
    }
    if (y > 1) {
        ++f[y];
    }
    return f;
}

Integer factorization_value(const Factorization& f) {
    Integer r = 1;
    for (const auto& [p, e] : f) {
        for (unsigned i = 0; i < e; ++i) {
            r *= p;
        }
    }
    return r;
}

std::string format_factorization(const Factorization& f) {
    if (f.empty()) {
        return "1";
    }
    std::ostringstream s;
    bool first = true;
    for (const auto& [p, e] : f) {
        if (!first) {
            s << "·";
        }
        first = false;
        s << p;
        if (e > 1) {
            s << "^" << e;
        }
    }
    return s.str();
}

}  // namespace samelson
