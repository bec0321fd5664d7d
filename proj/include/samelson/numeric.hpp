#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <stdexcept>
#include <string>

namespace samelson {

// Exact arbitrary-precision arithmetic. Everything downstream (series
// coefficients, lattice solves, orders) is built on these two types; no
// floating point appears anywhere in the library.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Prime -> exponent (>= 1). Product of p^e is the factored value.
using Factorization = std::map<Integer, unsigned>;

struct ZeroInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NotPrime : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct EvenPrime : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Safe two-argument rational constructor. cpp_rational reduces to lowest
// terms with a positive denominator on its own, but its (num, den)
// constructor rejects negative denominators outright instead of fixing the
// sign, so all construction goes through here.
Rational make_rational(Integer num, Integer den);

Integer factorial(unsigned n);

// C(n, k); zero when k > n.
Integer binomial(unsigned n, unsigned k);

// Stirling number of the second kind S(q, j): partitions of a q-set into j
// non-empty blocks. S(0,0) = 1, S(q,0) = 0 for q > 0, S(q,j) = 0 for j > q.
Integer stirling2(unsigned q, unsigned j);

// Deterministic trial division; inputs in scope are tiny.
bool is_prime(const Integer& p);

// nu_p(x): largest r with p^r | x. Throws ZeroInput when x = 0 and NotPrime
// when p is composite (or < 2).
unsigned p_valuation(const Integer& p, const Integer& x);

// x / 2^{nu_2(x)} for x >= 1.
Integer odd_part(const Integer& x);

// Prime factorization of odd_part(x) for x >= 1, by trial division.
Factorization factor_odd(const Integer& x);

// Product of p^e over the factorization (test/render helper).
Integer factorization_value(const Factorization& f);

// Ascending primes joined by a middle dot, exponent only when > 1:
// {3:2, 5:1} -> "3^2·5". Empty factorization renders as "1".
std::string format_factorization(const Factorization& f);

}  // namespace samelson
