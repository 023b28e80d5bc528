// Command-line front end. Usage: mononorm <command> <problem.json> [flags].
// The report is written to stdout as JSON; timing goes to stderr so that
// identical seeded runs produce byte-identical reports.

#include <mononorm/run.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    if (args.empty() || args[0] == "--help" || args[0] == "-h") {
        std::cout << "usage: mononorm <command> <problem.json> [flags]\n"
                     "commands: spread | closure | check | certify | oracle | reductions\n"
                     "run `mononorm <command> --help` for per-command flags\n";
        return args.empty() ? 3 : 0;
    }

    std::string problemText;
    std::vector<std::string> dispatchArgs{args[0]};
    if (args.size() >= 2 && !args[1].empty() && args[1][0] != '-') {
        std::ifstream in(args[1], std::ios::binary);
        if (!in) {
            std::cerr << "mononorm: cannot read problem file '" << args[1] << "'\n";
            return 3;
        }
        std::ostringstream buf;
        buf << in.rdbuf();
        problemText = buf.str();
        dispatchArgs.insert(dispatchArgs.end(), args.begin() + 2, args.end());
    } else {
        dispatchArgs.insert(dispatchArgs.end(), args.begin() + 1, args.end());
    }

    auto start = std::chrono::steady_clock::now();
    mononorm::RunResult rr = mononorm::runCommand(dispatchArgs, problemText);
    auto elapsed =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);

    if (!rr.report.empty()) std::cout << rr.report;
    if (!rr.error.empty()) std::cerr << "mononorm: " << rr.error << "\n";
    std::cerr << "completed in " << elapsed.count() << " ms (status " << rr.status << ")\n";
    return rr.status;
}
