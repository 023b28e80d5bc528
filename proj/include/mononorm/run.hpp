#ifndef MONONORM_RUN_HPP
#define MONONORM_RUN_HPP

#include <string>
#include <vector>

#include <CLI11.hpp>

#include "io.hpp"

namespace mononorm {

/**
 * Command dispatch behind the CLI binary, callable in-process by tests.
 *
 * Exit statuses: 0 a verdict was obtained (a "not normal" verdict is a
 * successful run), 2 problem-file parse error, 3 precondition or flag
 * violation, 4 internal inconsistency.
 */
struct RunResult {
    int status = 0;
    std::string report;
    std::string error;
};

inline constexpr long long kDefaultCoeffBound = 5;

namespace rundetail {

inline std::vector<long long> parseTuple(const std::string& s, const char* what) {
    std::vector<long long> out;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t comma = s.find(',', pos);
        std::string piece = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        try {
            std::size_t used = 0;
            long long v = std::stoll(piece, &used);
            if (used != piece.size() || v < 0) throw std::invalid_argument(piece);
            out.push_back(v);
        } catch (const std::exception&) {
            throw Error(std::string(what) + ": expected comma-separated nonnegative integers");
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (out.empty()) throw Error(std::string(what) + ": empty tuple");
    return out;
}

inline std::pair<long long, long long> parseWindow(const std::string& s) {
    std::size_t dots = s.find("..");
    if (dots == std::string::npos) throw Error("--window: expected LO..HI");
    try {
        long long lo = std::stoll(s.substr(0, dots));
        long long hi = std::stoll(s.substr(dots + 2));
        if (lo < 0 || hi < lo) throw std::invalid_argument(s);
        return {lo, hi};
    } catch (const std::exception&) {
        throw Error("--window: expected LO..HI with 0 <= LO <= HI");
    }
}

} // namespace rundetail

inline RunResult runCommand(const std::vector<std::string>& args, const std::string& problemText) {
    RunResult rr;

    CLI::App app{"normality of power products of monomial ideals"};
    app.name("mononorm");
    app.require_subcommand(1);

    std::string indexStr, mode = "full", typeStr, windowStr;
    long long ell = -1, maxTotal = -1, length = -1, trunc = -1;
    unsigned long long seed = 1;
    bool exhaustive = false;

    app.add_subcommand("spread", "analytic spread of the product ideal");
    auto* closureCmd = app.add_subcommand("closure", "integral closure of one power product");
    closureCmd->add_option("--index", indexStr, "multi-index n1,..,nr")->required();
    auto* checkCmd = app.add_subcommand("check", "is one power product integrally closed");
    checkCmd->add_option("--index", indexStr, "multi-index n1,..,nr")->required();
    auto* certifyCmd = app.add_subcommand("certify", "finite normality certification");
    certifyCmd->add_option("--mode", mode, "full or frontier")
        ->check(CLI::IsMember({"full", "frontier"}));
    certifyCmd->add_option("--ell", ell, "frontier level (frontier mode only)");
    certifyCmd->add_flag("--exhaustive", exhaustive, "scan past the first failure");
    auto* oracleCmd = app.add_subcommand("oracle", "brute-force scan up to a degree budget");
    oracleCmd->add_option("--max-total", maxTotal, "total degree budget (default lambda+3)");
    auto* redCmd = app.add_subcommand("reductions", "randomized reduction laboratory");
    redCmd->add_option("--length", length, "complete candidate length (default lambda)");
    redCmd->add_option("--type", typeStr, "joint type q1,..,qr to extract and verify");
    redCmd->add_option("--window", windowStr, "total degree window LO..HI (default lambda..lambda+3)");
    redCmd->add_option("--trunc", trunc, "degree cap for the truncated slices");
    redCmd->add_option("--seed", seed, "RNG seed (default 1)");

    try {
        std::vector<const char*> argv;
        argv.push_back("mononorm");
        for (const auto& a : args) argv.push_back(a.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());

        Problem problem = parseProblem(problemText);
        const int r = static_cast<int>(problem.ideals.size());
        const std::string command = app.get_subcommands().front()->get_name();
        Json report = reportEnvelope(command, problemText, problem);
        Json params, result;

        if (command == "spread") {
            result = spreadToJson(spreadOfProduct(problem.ideals));
        } else if (command == "closure" || command == "check") {
            MultiIndex n = rundetail::parseTuple(indexStr, "--index");
            if (static_cast<int>(n.size()) != r)
                throw DimensionMismatchError("--index length must match the number of ideals");
            params["index"] = n;
            if (command == "closure") {
                result["index"] = n;
                result["generators"] = idealToJson(closureGenerators(problem.ideals, n));
            } else {
                ClosureCheck check = isIntegrallyClosed(problem.ideals, n);
                result["index"] = n;
                result["closed"] = check.closed;
                if (check.witness) result["witness"] = *check.witness;
            }
        } else if (command == "certify") {
            params["mode"] = mode;
            params["exhaustive"] = exhaustive;
            if (mode == "full") {
                if (ell >= 0) throw Error("--ell applies to frontier mode only");
                result = certificateToJson(certifyFull(problem.ideals, exhaustive));
            } else {
                if (ell < 0) throw Error("frontier mode needs --ell");
                params["ell"] = ell;
                result = certificateToJson(certifyFrontier(problem.ideals, ell, exhaustive));
            }
        } else if (command == "oracle") {
            long long lambda = spreadOfProduct(problem.ideals).lambda;
            long long budget = maxTotal >= 0 ? maxTotal : lambda + 3;
            params["maxTotal"] = budget;
            params["lambda"] = lambda;
            result = oracleToJson(bruteForceCheck(problem.ideals, budget));
        } else if (command == "reductions") {
            SpreadReport spread = spreadOfProduct(problem.ideals);
            long long s = length >= 1 ? length : spread.lambda;
            auto [lo, hi] = windowStr.empty()
                                ? std::make_pair(spread.lambda, spread.lambda + 3)
                                : rundetail::parseWindow(windowStr);
            ReductionCandidate cand =
                randomCompleteCandidate(problem.ideals, s, seed, kDefaultCoeffBound);
            long long cap = trunc;
            if (cap < 0) {
                ClosureEngine engine(problem.ideals);
                long long prodBound = 0;
                for (const auto& ideal : problem.ideals) prodBound += ideal.maxGeneratorDegree();
                cap = prodBound + labdetail::windowGeneratorDegree(engine, r, hi + 1) + 4;
            }
            params["length"] = s;
            params["window"] = Json{{"lo", lo}, {"hi", hi}};
            params["trunc"] = cap;
            params["seed"] = seed;
            params["coeffBound"] = kDefaultCoeffBound;

            result["candidate"] = candidateToJson(cand);
            result["complete"] = labToJson(verifyCompleteReduction(problem.ideals, cand, lo, hi, cap));
            if (!typeStr.empty()) {
                MultiIndex q = rundetail::parseTuple(typeStr, "--type");
                if (static_cast<int>(q.size()) != r)
                    throw DimensionMismatchError("--type length must match the number of ideals");
                params["type"] = q;
                ReductionCandidate joint = extractJointCandidate(cand, q, consecutivePartition(q));
                result["joint"] = labToJson(verifyJointReduction(problem.ideals, joint, lo, hi, cap));
            }
            // column selections (i_1..i_s), capped to keep reports bounded
            Json filterReports = Json::array();
            const long long kMaxSelections = 32;
            std::vector<long long> sel(static_cast<std::size_t>(s), 0);
            long long emitted = 0;
            bool truncated = false;
            for (;;) {
                if (emitted >= kMaxSelections) { truncated = true; break; }
                std::vector<ReductionElement> sequence;
                for (long long j = 0; j < s; ++j)
                    sequence.push_back(cand.elements[static_cast<std::size_t>(sel[static_cast<std::size_t>(j)])]
                                                    [static_cast<std::size_t>(j)]);
                Json entry;
                Json selJson = Json::array();
                for (long long v : sel) selJson.push_back(v + 1);
                entry["selection"] = selJson;
                entry["report"] = labToJson(
                    filterRegularWindowTest(problem.ideals, sequence, lo, hi, cap));
                filterReports.push_back(std::move(entry));
                ++emitted;
                long long j = s - 1;
                while (j >= 0 && sel[static_cast<std::size_t>(j)] == r - 1) {
                    sel[static_cast<std::size_t>(j)] = 0;
                    --j;
                }
                if (j < 0) break;
                ++sel[static_cast<std::size_t>(j)];
            }
            result["filterRegular"] = filterReports;
            if (truncated) result["filterRegularTruncated"] = true;
        }

        report["params"] = params;
        report["result"] = result;
        rr.report = report.dump(2) + "\n";
        rr.status = 0;
    } catch (const CLI::CallForHelp&) {
        rr.report = app.help();
        rr.status = 0;
    } catch (const CLI::ParseError& e) {
        rr.error = std::string("flag error: ") + e.what();
        rr.status = 3;
    } catch (const ParseError& e) {
        rr.error = e.what();
        rr.status = 2;
    } catch (const InconsistencyDetectedError& e) {
        rr.error = std::string(e.what()) + "\n  " + e.certificateJson + "\n  " + e.oracleJson;
        rr.status = 4;
    } catch (const Error& e) {
        rr.error = e.what();
        rr.status = 3;
    } catch (const std::exception& e) {
        rr.error = std::string("internal error: ") + e.what();
        rr.status = 4;
    }
    return rr;
}

} // namespace mononorm

#endif
