#ifndef MONONORM_IO_HPP
#define MONONORM_IO_HPP

#include <cctype>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "certify.hpp"
#include "errors.hpp"
#include "monomial_ideal.hpp"
#include "oracle.hpp"
#include "reductions.hpp"
#include "spread.hpp"

namespace mononorm {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolName = "mononorm";
inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr const char* kReportSchema = "mononorm-report/1";

struct Problem {
    std::vector<std::string> vars;
    std::vector<MonomialIdeal> ideals;
};

namespace iodetail {

inline std::pair<long long, long long> lineColumnAt(const std::string& text, std::size_t byte) {
    long long line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') { ++line; col = 1; }
        else ++col;
    }
    return {line, col};
}

/// Monomial grammar: "1" or var ('^' uint)? ('*' var ('^' uint)?)*, spaces allowed.
inline ExponentVector parseMonomial(const std::string& s, const std::vector<std::string>& vars,
                                    const std::string& where) {
    ExponentVector exps(vars.size(), 0);
    std::size_t pos = 0;
    auto skipSpace = [&]() { while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos; };
    auto fail = [&](const std::string& msg) -> void {
        throw ParseError(where + ": " + msg, 0, static_cast<long long>(pos) + 1);
    };
    skipSpace();
    if (pos < s.size() && s[pos] == '1') {
        ++pos;
        skipSpace();
        if (pos != s.size()) fail("unexpected text after '1'");
        return exps;
    }
    bool expectFactor = true;
    while (pos < s.size()) {
        skipSpace();
        if (!expectFactor) {
            if (s[pos] != '*') fail("expected '*' between factors");
            ++pos;
            skipSpace();
        }
        std::size_t start = pos;
        while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_') &&
               s[pos] != '^')
            ++pos;
        // variable names may contain digits but must not start with one
        std::string name = s.substr(start, pos - start);
        if (name.empty() || std::isdigit(static_cast<unsigned char>(name[0]))) {
            pos = start;
            fail("expected a variable name");
        }
        std::size_t varIdx = vars.size();
        for (std::size_t v = 0; v < vars.size(); ++v)
            if (vars[v] == name) { varIdx = v; break; }
        if (varIdx == vars.size()) fail("unknown variable '" + name + "'");
        long long exp = 1;
        skipSpace();
        if (pos < s.size() && s[pos] == '^') {
            ++pos;
            skipSpace();
            std::size_t numStart = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            if (pos == numStart) fail("expected a nonnegative exponent after '^'");
            exp = std::stoll(s.substr(numStart, pos - numStart));
        }
        exps[varIdx] += exp;
        expectFactor = false;
        skipSpace();
        if (pos < s.size() && s[pos] != '*') fail("expected '*' between factors");
    }
    if (expectFactor) fail("empty monomial");
    return exps;
}

inline std::string fnv1a64(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

} // namespace iodetail

inline Problem parseProblem(const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        auto [line, col] = iodetail::lineColumnAt(text, e.byte > 0 ? e.byte - 1 : 0);
        throw ParseError("invalid JSON: " + std::string(e.what()), line, col);
    }
    if (!doc.is_object() || !doc.contains("vars") || !doc.contains("ideals"))
        throw ParseError("problem must be an object with 'vars' and 'ideals'", 1, 1);

    Problem problem;
    for (const auto& v : doc["vars"]) {
        if (!v.is_string() || v.get<std::string>().empty())
            throw ParseError("'vars' must be nonempty strings", 1, 1);
        problem.vars.push_back(v.get<std::string>());
    }
    if (problem.vars.empty()) throw ParseError("'vars' must not be empty", 1, 1);
    const int d = static_cast<int>(problem.vars.size());

    if (!doc["ideals"].is_array() || doc["ideals"].empty())
        throw ParseError("'ideals' must be a nonempty array", 1, 1);
    std::size_t idealIdx = 0;
    for (const auto& gensJson : doc["ideals"]) {
        ++idealIdx;
        if (!gensJson.is_array()) throw ParseError("each ideal must be an array of generators", 1, 1);
        if (gensJson.empty()) throw ZeroIdealError("ideal #" + std::to_string(idealIdx) + " has no generators");
        std::vector<ExponentVector> raw;
        std::size_t genIdx = 0;
        for (const auto& gen : gensJson) {
            ++genIdx;
            std::string where = "ideal #" + std::to_string(idealIdx) + ", generator #" +
                                std::to_string(genIdx);
            if (gen.is_string()) {
                raw.push_back(iodetail::parseMonomial(gen.get<std::string>(), problem.vars, where));
            } else if (gen.is_array()) {
                ExponentVector e;
                for (const auto& x : gen) {
                    if (!x.is_number_integer() || x.get<long long>() < 0)
                        throw ParseError(where + ": exponents must be nonnegative integers", 0, 1);
                    e.push_back(x.get<long long>());
                }
                if (static_cast<int>(e.size()) != d)
                    throw DimensionMismatchError(where + ": expected " + std::to_string(d) +
                                                 " exponents");
                raw.push_back(std::move(e));
            } else {
                throw ParseError(where + ": generator must be a tuple or a monomial string", 0, 1);
            }
        }
        MonomialIdeal ideal = minimalize(std::move(raw), d);
        if (ideal.isUnit())
            throw UnitIdealInputError("ideal #" + std::to_string(idealIdx) + " is the unit ideal");
        problem.ideals.push_back(std::move(ideal));
    }
    return problem;
}

inline Json idealToJson(const MonomialIdeal& ideal) {
    Json gens = Json::array();
    for (const auto& g : ideal.gens()) gens.push_back(g);
    return gens;
}

inline Json problemToJson(const Problem& problem) {
    Json doc;
    doc["vars"] = problem.vars;
    Json ideals = Json::array();
    for (const auto& ideal : problem.ideals) ideals.push_back(idealToJson(ideal));
    doc["ideals"] = ideals;
    return doc;
}

inline std::string serializeProblem(const Problem& problem) { return problemToJson(problem).dump(2) + "\n"; }

inline Json spreadToJson(const SpreadReport& report) {
    Json j;
    j["lambda"] = report.lambda;
    j["method"] = report.method;
    j["productGenerators"] = report.productGenerators;
    return j;
}

inline Json certificateToJson(const Certificate& cert) {
    Json j;
    j["mode"] = cert.mode == CertifyMode::Full ? "full" : "frontier";
    j["r"] = cert.r;
    j["lambda"] = cert.lambda;
    j["ell"] = cert.ell;
    j["checked"] = cert.checked;
    j["verdict"] = cert.verdict == Verdict::AllClosed ? "allClosed" : "counterexample";
    if (cert.witnessIndex) j["witnessIndex"] = *cert.witnessIndex;
    if (cert.witnessMonomial) j["witnessMonomial"] = *cert.witnessMonomial;
    if (!cert.allFailures.empty()) {
        Json fails = Json::array();
        for (const auto& [n, w] : cert.allFailures)
            fails.push_back(Json{{"index", n}, {"witness", w}});
        j["allFailures"] = fails;
    }
    j["conclusion"] = cert.conclusion;
    return j;
}

inline Json oracleToJson(const OracleReport& report) {
    Json j;
    j["maxTotalDegree"] = report.maxTotalDegree;
    j["scannedCount"] = report.scannedCount;
    Json violations = Json::array();
    for (const auto& [n, w] : report.violations)
        violations.push_back(Json{{"index", n}, {"witness", w}});
    j["violations"] = violations;
    return j;
}

inline Json candidateToJson(const ReductionCandidate& cand) {
    Json j;
    j["shape"] = cand.shape == CandidateShape::Complete ? "complete" : "joint";
    j["length"] = cand.length;
    if (cand.shape == CandidateShape::Joint) j["type"] = cand.type;
    j["seed"] = cand.seed;
    j["coeffBound"] = cand.coeffBound;
    Json elements = Json::array();
    for (const auto& list : cand.elements) {
        Json row = Json::array();
        for (const auto& el : list) row.push_back(el.coeffs);
        elements.push_back(row);
    }
    j["coefficients"] = elements; // [i][j] = coefficients over gens of I_i
    return j;
}

inline Json labToJson(const LabReport& report) {
    Json j;
    j["kind"] = report.kind;
    j["candidate"] = report.candidateSummary;
    j["window"] = Json{{"lo", report.windowLo}, {"hi", report.windowHi}};
    j["cap"] = report.cap;
    j["margin"] = report.margin;
    j["passed"] = report.passed();
    Json outcomes = Json::array();
    for (const auto& o : report.outcomes) {
        Json oj;
        oj["n"] = o.n;
        if (o.prefix > 0) oj["prefix"] = o.prefix;
        oj["status"] = o.status == LabStatus::Pass ? "pass"
                       : o.status == LabStatus::Fail ? "fail" : "skipped";
        if (!o.note.empty()) oj["note"] = o.note;
        if (!o.witness.empty()) {
            Json w = Json::array();
            for (const auto& [mono, coeff] : o.witness)
                w.push_back(Json{{"monomial", mono}, {"coeff", toString(coeff)}});
            oj["witness"] = w;
        }
        outcomes.push_back(oj);
    }
    j["outcomes"] = outcomes;
    return j;
}

/// Report envelope shared by every command.
inline Json reportEnvelope(const std::string& command, const std::string& problemText,
                           const Problem& problem) {
    Json j;
    j["schema"] = kReportSchema;
    j["tool"] = Json{{"name", kToolName}, {"version", kToolVersion}};
    j["command"] = command;
    j["input"] = Json{{"digest", "fnv1a64:" + iodetail::fnv1a64(problemText)},
                      {"vars", problem.vars}};
    Json ideals = Json::array();
    for (const auto& ideal : problem.ideals) ideals.push_back(idealToJson(ideal));
    j["input"]["ideals"] = ideals;
    return j;
}

} // namespace mononorm

#endif
