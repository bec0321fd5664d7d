#include "samelson/core.hpp"

#include <sstream>

namespace samelson {

void validate(const ProductProblem& problem) {
    std::ostringstream msg;
    if (problem.a < 1 || problem.b < 1 || problem.n < 1) {
        msg << "a, b, n must all be >= 1 (got a=" << problem.a
            << ", b=" << problem.b << ", n=" << problem.n << ")";
        throw InvalidProblem(msg.str());
    }
    if (problem.a >= problem.n) {
        msg << "a < n required (got a=" << problem.a << ", n=" << problem.n << ")";
        throw InvalidProblem(msg.str());
    }
    if (problem.b >= problem.n) {
        msg << "b < n required (got b=" << problem.b << ", n=" << problem.n << ")";
        throw InvalidProblem(msg.str());
    }
}

const char* to_string(Validity v) {
    switch (v) {
        case Validity::IN_RANGE:
            return "IN_RANGE";
        case Validity::BOUNDARY_KM1:
            return "BOUNDARY_KM1";
        default:
            return "OUT_OF_METHOD_RANGE";
    }
}

std::vector<RowIndex> row_basis(const ProductProblem& problem) {
    validate(problem);
    std::vector<RowIndex> rows;
    for (unsigned p = 1; p <= problem.a; ++p) {
        for (unsigned q = 1; q <= problem.b; ++q) {
            if (p + q >= problem.n - 1) {
                rows.push_back({p, q});
            }
        }
    }
    return rows;
}

GeneratorMatrix generator_matrix(const ProductProblem& problem) {
    GeneratorMatrix g;
    g.problem = problem;
    g.row_basis = row_basis(problem);  // validates
    for (unsigned i = 1; i <= problem.a; ++i) {
        for (unsigned j = 1; j <= problem.b; ++j) {
            g.col_basis.emplace_back(i, j);
        }
    }
    g.matrix = IntegerMatrix(g.row_basis.size(), g.col_basis.size());
    for (std::size_t r = 0; r < g.row_basis.size(); ++r) {
        const RowIndex& row = g.row_basis[r];
        Rational mfact(factorial(row.m()));
        for (std::size_t c = 0; c < g.col_basis.size(); ++c) {
            auto [i, j] = g.col_basis[c];
            Rational e = mfact * chern_coeff(i, row.p) * chern_coeff(j, row.q);
            if (denominator(e) != 1) {
                throw std::logic_error(
                    "generator_matrix: non-integral entry (should be impossible)");
            }
            g.matrix.at(r, c) = numerator(e);
        }
    }
    return g;
}

TargetVector target_vector(const ProductProblem& problem) {
    return TargetVector(row_basis(problem).size(), Integer(1));
}

OrderResult samelson_order(const ProductProblem& problem) {
    GeneratorMatrix g = generator_matrix(problem);  // validates
    TargetVector t(g.row_basis.size(), Integer(1));

    OrderResult result;
    try {
        MinimalMultipleResult mm = minimal_multiple(g.matrix, t);
        result.d_integral = mm.d;
        result.certificate = std::move(mm.certificate);
    } catch (const InfiniteOrder&) {
        // The generator matrix has a (p+q+1)! entry on its diagonal, so it
        // has full row rank and this cannot happen for a validated problem.
        throw std::logic_error(
            "samelson_order: infinite order on a valid problem (bug)");
    }
    result.d_odd = odd_part(result.d_integral);
    result.factorization = factor_odd(result.d_integral);
    if (g.row_basis.empty()) {
        result.validity = Validity::OUT_OF_METHOD_RANGE;
    } else if (problem.k() >= 0 && problem.k() <= int(problem.n) - 1) {
        result.validity = Validity::IN_RANGE;
    } else if (problem.k() == -1) {
        result.validity = Validity::BOUNDARY_KM1;
    } else {
        result.validity = Validity::OUT_OF_METHOD_RANGE;
    }
    return result;
}

}  // namespace samelson
