#include "samelson/applications.hpp"

namespace samelson {

const char* to_string(Commutativity c) {
    switch (c) {
        case Commutativity::COMMUTATIVE:
            return "COMMUTATIVE";
        case Commutativity::NOT_COMMUTATIVE:
            return "NOT_COMMUTATIVE";
        default:
            return "UNKNOWN";
    }
}

OrderResult su4_commutator_order() { return samelson_order({3, 3, 4}); }

unsigned gauge_type_bound(const Integer& m, const Integer& p) {
    if (m < 1) {
        throw std::invalid_argument("gauge_type_bound: order must be >= 1");
    }
    if (p == 2) {
        throw EvenPrime("gauge_type_bound: prime must be odd");
    }
    if (!is_prime(p)) {
        throw NotPrime("gauge_type_bound: p is not prime");
    }
    return p_valuation(p, m) + 1;
}

namespace {

// The largest product ⟨ε_{a,n}, ε_{b,n}⟩ detectable in the stable range
// governs commutativity of SU(n) at odd primes: its odd order's p-content is
// the obstruction witness.
ProductProblem governing_problem(int n) {
    switch (n) {
        case 3:
            return {2, 2, 3};
        case 4:
            return {3, 3, 4};
        default:
            return {4, 4, 5};
    }
}

}  // namespace

CommutativityVerdict homotopy_commutative(int n, const Integer& p) {
    if (p == 2) {
        throw EvenPrime("homotopy_commutative: prime must be odd");
    }
    if (!is_prime(p)) {
        throw NotPrime("homotopy_commutative: p is not prime");
    }
    if (n < 3 || n > 5) {
        return {Commutativity::UNKNOWN, std::nullopt};
    }
    ProductProblem problem = governing_problem(n);
    OrderResult order = samelson_order(problem);
    unsigned nu = p_valuation(p, order.d_odd);
    if (nu == 0) {
        return {Commutativity::COMMUTATIVE, std::nullopt};
    }
    return {Commutativity::NOT_COMMUTATIVE,
            CommutativityWitness{problem, p, nu}};
}

}  // namespace samelson
