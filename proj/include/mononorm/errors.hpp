#ifndef MONONORM_ERRORS_HPP
#define MONONORM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mononorm {

/// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// An operation received an empty generator set (the zero ideal).
struct ZeroIdealError : Error {
    explicit ZeroIdealError(const std::string& what = "zero ideal is not representable")
        : Error(what) {}
};

/// An input ideal contains the monomial 1, i.e. it is the unit ideal.
struct UnitIdealInputError : Error {
    explicit UnitIdealInputError(const std::string& what = "unit ideal is not a valid input ideal")
        : Error(what) {}
};

/// Ambient dimensions or multi-index lengths do not agree.
struct DimensionMismatchError : Error {
    explicit DimensionMismatchError(const std::string& what = "dimension mismatch")
        : Error(what) {}
};

/// A linear system handed to the LP kernel is structurally invalid.
struct MalformedSystemError : Error {
    explicit MalformedSystemError(const std::string& what = "malformed linear system")
        : Error(what) {}
};

/// A power-product operation that needs |n| >= 1 was given |n| = 0.
struct ZeroTotalDegreeError : Error {
    explicit ZeroTotalDegreeError(const std::string& what = "total degree of the multi-index is zero")
        : Error(what) {}
};

/// Newton polyhedron of an empty point set.
struct EmptyPolyhedronError : Error {
    explicit EmptyPolyhedronError(const std::string& what = "empty point set has no Newton polyhedron")
        : Error(what) {}
};

/// Growth-oracle window is too small to fit an exponent.
struct WindowTooSmallError : Error {
    explicit WindowTooSmallError(const std::string& what = "growth window too small (need N >= 4)")
        : Error(what) {}
};

/// Truncation cap is below the minimum required by the operation.
struct CapTooSmallError : Error {
    explicit CapTooSmallError(const std::string& what = "degree cap too small") : Error(what) {}
};

/// Invalid column partition when extracting a joint candidate.
struct BadPartitionError : Error {
    explicit BadPartitionError(const std::string& what = "invalid column partition") : Error(what) {}
};

/// A reduction candidate violates a structural invariant.
struct InvalidCandidateError : Error {
    explicit InvalidCandidateError(const std::string& what = "invalid reduction candidate")
        : Error(what) {}
};

/// Frontier certification called with ell below lambda - 1.
struct EllBelowThresholdError : Error {
    long long ell;
    long long lambda;
    EllBelowThresholdError(long long ell_, long long lambda_)
        : Error("frontier level " + std::to_string(ell_) + " is below lambda-1 = " +
                std::to_string(lambda_ - 1)),
          ell(ell_), lambda(lambda_) {}
};

/// The certifier and the brute-force oracle disagree. Always a bug.
struct InconsistencyDetectedError : Error {
    std::string certificateJson;
    std::string oracleJson;
    InconsistencyDetectedError(std::string certJson, std::string oraJson)
        : Error("certifier and brute-force oracle disagree"),
          certificateJson(std::move(certJson)), oracleJson(std::move(oraJson)) {}
};

/// Problem-file syntax error with a 1-based source position.
struct ParseError : Error {
    long long line;
    long long column;
    ParseError(const std::string& what, long long line_, long long column_)
        : Error(what + " (line " + std::to_string(line_) + ", column " + std::to_string(column_) + ")"),
          line(line_), column(column_) {}
};

} // namespace mononorm

#endif
