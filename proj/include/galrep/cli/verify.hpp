#pragma once

#include <optional>
#include <string>
#include <vector>

namespace galrep::cli {

enum class Suite { All, Lemmas, Local, Ecq };

std::optional<Suite> parse_suite(const std::string& name);

struct CriterionResult {
    unsigned id = 0;
    std::string title;
    bool passed = false;
    std::string detail;
    double seconds = 0;
    double limit_seconds = 0;  // 0 when untimed
};

/// Wall-clock ceiling for the whole suite.
inline constexpr double full_suite_limit_seconds = 600;

/// Runs the acceptance criteria of the suite in order. Suite::All adds the
/// total-runtime criterion at the end.
std::vector<CriterionResult> run_suite(Suite suite);

}  // namespace galrep::cli
