#pragma once

#include "samelson/core.hpp"

#include <optional>

namespace samelson {

enum class Commutativity { COMMUTATIVE, NOT_COMMUTATIVE, UNKNOWN };

const char* to_string(Commutativity c);

struct CommutativityWitness {
    ProductProblem problem;
    Integer prime;
    unsigned valuation = 0;  // >= 1 whenever attached to NOT_COMMUTATIVE
};

struct CommutativityVerdict {
    Commutativity value = Commutativity::UNKNOWN;
    std::optional<CommutativityWitness> witness;
};

// Order of the SU(4) commutator map, which equals the order of the Samelson
// product for (3,3,4) (Theorem 1.4 via Lemma 4.3).
OrderResult su4_commutator_order();

// Upper bound nu_p(m) + 1 on the number of p-local homotopy types of gauge
// groups (Theorem 4.1). Only odd primes are meaningful here; p = 2 is
// refused rather than answered.
unsigned gauge_type_bound(const Integer& m, const Integer& p);

// Homotopy commutativity of SU(n)_(p) for n in {3,4,5}, decided by the
// governing Samelson product ((2,2,3), (3,3,4), (4,4,5) respectively):
// COMMUTATIVE iff p does not divide its odd order, with a witness carrying
// the valuation otherwise. Other n are UNKNOWN.
CommutativityVerdict homotopy_commutative(int n, const Integer& p);

}  // namespace samelson
