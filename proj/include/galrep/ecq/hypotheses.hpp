#pragma once

#include "galrep/ecq/reduction.hpp"
#include "galrep/ecq/surjectivity.hpp"
#include "galrep/localmodel/bound.hpp"

#include <optional>
#include <string>
#include <vector>

namespace galrep::ecq {

enum class Verdict { Satisfied, Violated, Undetermined };

const char* to_string(Verdict v) noexcept;

struct HypothesisCheck {
    std::string name;  // "(a′)" .. "(d′)"
    Verdict verdict = Verdict::Undetermined;
    std::string where;  // e.g. "at l=11" for a violation located at one prime
    std::string evidence;
};

struct HypothesisReport {
    Curve curve;
    std::uint64_t p = 0;
    unsigned j = 0;
    std::optional<unsigned> sha_dim;
    std::uint64_t aux_bound = 0;

    StandardInvariants invariants;
    ReductionData reduction;
    std::optional<std::int64_t> a_p;
    SurjectivityVerdict surjectivity;

    std::vector<HypothesisCheck> checks;  // (a′), (b′), (c′), (d′)
    std::optional<localmodel::LocalCase> local_case;
    std::optional<localmodel::BoundReport> bound;
    std::optional<std::string> conclusion;
    std::string message;

    /// 0 all satisfied, 1 something violated, 2 otherwise.
    int exit_status() const;
};

inline constexpr std::uint64_t default_aux_bound = 1000;

/// Throws InvalidJ unless 1 <= j <= p - 2 and InvalidParams unless p >= 5 is prime.
HypothesisReport check_hypotheses(const Curve& c, std::uint64_t p, unsigned j, std::optional<unsigned> sha_dim,
                                  std::uint64_t aux_bound = default_aux_bound);

}  // namespace galrep::ecq
