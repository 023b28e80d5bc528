#ifndef MONONORM_CERTIFY_HPP
#define MONONORM_CERTIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "exponent.hpp"
#include "newton.hpp"
#include "spread.hpp"

namespace mononorm {

enum class CertifyMode { Full, Frontier };
enum class Verdict { AllClosed, Counterexample };

/**
 * Result of a normality certification run.
 *
 * Full mode checks every n with 0 <= |n| <= lambda - 1; a clean sweep
 * certifies that all power products I^n are integrally closed. Frontier
 * mode checks the single slice |n| = ell for ell >= lambda - 1; a clean
 * sweep certifies closedness of every |n| >= ell. Both finiteness claims
 * rest on the lambda bound for the normalized multi-Rees algebra; they are
 * cross-checked at desk scale by the brute-force oracle.
 */
struct Certificate {
    CertifyMode mode = CertifyMode::Full;
    int r = 0;
    long long lambda = 0;
    long long ell = 0; // lambda - 1 in full mode, the requested level in frontier mode
    std::vector<MultiIndex> checked;
    Verdict verdict = Verdict::AllClosed;
    std::optional<MultiIndex> witnessIndex;
    std::optional<ExponentVector> witnessMonomial;
    std::vector<std::pair<MultiIndex, ExponentVector>> allFailures; // exhaustive mode only
    std::string conclusion;
};

/// All n in N^r with |n| = s, ascending lexicographic; C(s+r-1, r-1) of them.
inline std::vector<MultiIndex> enumerateMultiIndices(int r, long long s) {
    if (r < 1 || s < 0) throw DimensionMismatchError("need r >= 1 and s >= 0");
    return compositionsOf(s, r);
}

namespace detail {

inline void scanIndices(ClosureEngine& engine, const std::vector<MultiIndex>& indices,
                        bool exhaustive, Certificate& cert) {
    for (const auto& n : indices) {
        cert.checked.push_back(n);
        if (cert.verdict == Verdict::Counterexample && !exhaustive) continue;
        ClosureCheck check = engine.isIntegrallyClosed(n);
        if (check.closed) continue;
        if (cert.verdict == Verdict::AllClosed) {
            cert.verdict = Verdict::Counterexample;
            cert.witnessIndex = n;
            cert.witnessMonomial = check.witness;
            if (!exhaustive) continue;
        }
        cert.allFailures.emplace_back(n, *check.witness);
    }
}

} // namespace detail

/// Full-mode certification: check 0 <= |n| <= lambda - 1.
inline Certificate certifyFull(const std::vector<MonomialIdeal>& ideals, bool exhaustive = false) {
    SpreadReport spread = spreadOfProduct(ideals);
    ClosureEngine engine(ideals);
    Certificate cert;
    cert.mode = CertifyMode::Full;
    cert.r = static_cast<int>(ideals.size());
    cert.lambda = spread.lambda;
    cert.ell = spread.lambda - 1;
    std::vector<MultiIndex> indices;
    for (long long s = 0; s <= cert.ell; ++s)
        for (auto& n : enumerateMultiIndices(cert.r, s)) indices.push_back(std::move(n));
    detail::scanIndices(engine, indices, exhaustive, cert);
    if (cert.verdict == Verdict::AllClosed) {
        cert.conclusion = "every power product I^n is integrally closed (the family is normal)";
        if (cert.lambda == 1)
            cert.conclusion += "; lambda = 1, so only n = 0 required checking and the "
                               "certification is unconditional";
    } else {
        cert.conclusion = "I^" + renderTuple(*cert.witnessIndex) +
                          " is not integrally closed; monomial with exponent " +
                          renderTuple(*cert.witnessMonomial) +
                          " lies in the integral closure but not in the power";
    }
    return cert;
}

/// Frontier-mode certification: check the single slice |n| = ell.
inline Certificate certifyFrontier(const std::vector<MonomialIdeal>& ideals, long long ell,
                                   bool exhaustive = false) {
    SpreadReport spread = spreadOfProduct(ideals);
    if (ell < spread.lambda - 1) throw EllBelowThresholdError(ell, spread.lambda);
    ClosureEngine engine(ideals);
    Certificate cert;
    cert.mode = CertifyMode::Frontier;
    cert.r = static_cast<int>(ideals.size());
    cert.lambda = spread.lambda;
    cert.ell = ell;
    detail::scanIndices(engine, enumerateMultiIndices(cert.r, ell), exhaustive, cert);
    if (cert.verdict == Verdict::AllClosed) {
        cert.conclusion = "I^n is integrally closed for every n with |n| >= " +
                          std::to_string(ell);
    } else {
        cert.conclusion = "frontier slice |n| = " + std::to_string(ell) +
                          " fails at n = " + renderTuple(*cert.witnessIndex) +
                          "; witness exponent " + renderTuple(*cert.witnessMonomial);
    }
    return cert;
}

} // namespace mononorm

#endif
