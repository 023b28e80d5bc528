#ifndef MONONORM_SPREAD_HPP
#define MONONORM_SPREAD_HPP

#include <string>
#include <vector>

#include "errors.hpp"
#include "monomial_ideal.hpp"
#include "newton.hpp"

namespace mononorm {

struct SpreadReport {
    long long lambda = 0;
    std::string method; // "compactFace" or "growthOracle"
    long long productGenerators = 0;
};

/**
 * Analytic spread of a nonzero proper monomial ideal: one plus the maximal
 * dimension of a compact face of its Newton polyhedron. This is the primary
 * route; growthExponent below is the independent cross-check and the test
 * suite requires exact agreement between the two on the whole catalog.
 */
inline long long analyticSpread(const MonomialIdeal& ideal) {
    if (ideal.isUnit()) throw UnitIdealInputError();
    return 1 + maxCompactFaceDim(NewtonPolyhedron{ideal.dim(), ideal.gens()});
}

/// lambda(I_1 ... I_r), the quantity controlling how many power products
/// have to be checked for the family to be normal.
inline SpreadReport spreadOfProduct(const std::vector<MonomialIdeal>& ideals) {
    if (ideals.empty()) throw DimensionMismatchError("empty ideal list");
    for (const auto& ideal : ideals)
        if (ideal.isUnit()) throw UnitIdealInputError();
    MonomialIdeal prod = multiPower(ideals, MultiIndex(ideals.size(), 1));
    SpreadReport report;
    report.lambda = analyticSpread(prod);
    report.method = "compactFace";
    report.productGenerators = static_cast<long long>(prod.gens().size());
    return report;
}

/**
 * Growth-rate oracle for the analytic spread. Counts the minimal generators
 * g(n) of the integral closure of I^n for n = 1..N and bounds the growth
 * exponent by doubling ratios over the last half of the window: q is the
 * smallest integer with g(2n) <= 2^q g(n) for every pair with 2n > N/2.
 * Returns 1 + q. Never used for certification, only as a cross-check.
 */
inline long long growthExponent(const MonomialIdeal& ideal, long long N) {
    if (N < 4) throw WindowTooSmallError();
    if (ideal.isUnit()) throw UnitIdealInputError();
    ClosureEngine engine({ideal});
    std::vector<long long> counts(static_cast<std::size_t>(N) + 1, 0);
    for (long long n = 1; n <= N; ++n)
        counts[static_cast<std::size_t>(n)] =
            static_cast<long long>(engine.closureGenerators({n}).gens().size());

    long long q = 0;
    for (long long n = 1; 2 * n <= N; ++n) {
        if (2 * (2 * n) <= N) continue; // keep only the last half of the window
        long long lo = counts[static_cast<std::size_t>(n)];
        long long hi = counts[static_cast<std::size_t>(2 * n)];
        long long t = 0;
        Integer bound = lo;
        while (bound < hi) {
            bound *= 2;
            ++t;
        }
        q = std::max(q, t);
    }
    return 1 + q;
}

} // namespace mononorm

#endif
