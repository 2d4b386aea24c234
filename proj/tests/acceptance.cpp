// Runs `verify --suite all` through the command-line entry point and prints
// one line per acceptance criterion.

#include "galrep/cli/run.hpp"

#include <iostream>

int main() {
    const auto outcome = galrep::cli::run({"verify", "--suite", "all", "--format", "json"});
    if (!outcome.report) {
        std::cerr << outcome.err;
        std::cout << "FAIL  verify did not produce a report\n";
        return 1;
    }
    bool all = true;
    for (const auto& c : outcome.report->result.at("criteria")) {
        const bool ok = c.at("passed").get<bool>();
        all = all && ok;
        std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << c.at("id").get<unsigned>() << ": "
                  << c.at("title").get<std::string>() << " [" << c.at("seconds").get<double>() << " s] "
                  << c.at("detail").get<std::string>() << '\n';
    }
    return all ? 0 : 1;
}
