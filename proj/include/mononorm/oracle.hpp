#ifndef MONONORM_ORACLE_HPP
#define MONONORM_ORACLE_HPP

#include <string>
#include <vector>

#include "certify.hpp"
#include "errors.hpp"
#include "newton.hpp"

namespace mononorm {

/**
 * Brute-force scan result. The oracle is theorem-independent: it checks
 * every power product up to a total-degree budget directly, one integral
 * closure at a time, and is what the certifier is validated against.
 */
struct OracleReport {
    long long maxTotalDegree = 0;
    std::vector<std::pair<MultiIndex, ExponentVector>> violations; // (index, witness)
    long long scannedCount = 0;
};

inline OracleReport bruteForceCheck(const std::vector<MonomialIdeal>& ideals, long long B) {
    if (B < 0) throw DimensionMismatchError("oracle budget must be nonnegative");
    ClosureEngine engine(ideals);
    OracleReport report;
    report.maxTotalDegree = B;
    const int r = static_cast<int>(ideals.size());
    for (long long s = 0; s <= B; ++s) {
        for (const auto& n : enumerateMultiIndices(r, s)) {
            ++report.scannedCount;
            ClosureCheck check = engine.isIntegrallyClosed(n);
            if (!check.closed) report.violations.emplace_back(n, *check.witness);
        }
    }
    return report;
}

namespace detail {

inline std::string briefCertificate(const Certificate& cert) {
    std::string s = "certifyFull: lambda=" + std::to_string(cert.lambda);
    if (cert.verdict == Verdict::AllClosed) return s + ", allClosed";
    return s + ", counterexample at " + renderTuple(*cert.witnessIndex);
}

inline std::string briefOracle(const OracleReport& report) {
    std::string s = "bruteForceCheck: B=" + std::to_string(report.maxTotalDegree) +
                    ", scanned=" + std::to_string(report.scannedCount) + ", violations=[";
    for (std::size_t i = 0; i < report.violations.size(); ++i) {
        if (i) s += ", ";
        s += renderTuple(report.violations[i].first);
    }
    return s + "]";
}

} // namespace detail

/**
 * Consistency gate between the certifier and the oracle: an allClosed
 * certificate must see a clean scan up to B, and a counterexample must
 * reappear among the scanned violations. Disagreement means a bug in one
 * of the two routes and throws; it is never a mathematical outcome.
 */
inline bool crossValidate(const std::vector<MonomialIdeal>& ideals, long long B) {
    Certificate cert = certifyFull(ideals);
    if (B < cert.lambda + 2)
        throw DimensionMismatchError("crossValidate needs B >= lambda + 2");
    OracleReport report = bruteForceCheck(ideals, B);
    bool consistent;
    if (cert.verdict == Verdict::AllClosed) {
        consistent = report.violations.empty();
    } else {
        consistent = false;
        for (const auto& [n, witness] : report.violations)
            if (n == *cert.witnessIndex) { consistent = true; break; }
    }
    if (!consistent)
        throw InconsistencyDetectedError(detail::briefCertificate(cert),
                                         detail::briefOracle(report));
    return true;
}

} // namespace mononorm

#endif
