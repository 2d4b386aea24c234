#pragma once

#include "galrep/ecq/curve.hpp"

#include <optional>
#include <string>
#include <vector>

namespace galrep::ecq {

/// Maximal proper subgroup families of GL_2(F_p) containing no SL_2.
enum class SubgroupFamily { Borel, SplitCartanNormalizer, NonSplitCartanNormalizer, Exceptional };

const char* to_string(SubgroupFamily f) noexcept;

enum class SurjectivityTag { Surjective, NonSurjectiveSuspected, Undetermined };

const char* to_string(SurjectivityTag t) noexcept;

struct FrobeniusSignature {
    std::uint64_t q = 0;
    std::int64_t a_q = 0;
};

struct FamilyExclusion {
    SubgroupFamily family;
    std::optional<FrobeniusSignature> witness;  // first q whose Frobenius cannot lie in the family
};

struct SurjectivityVerdict {
    SurjectivityTag tag = SurjectivityTag::Undetermined;
    std::optional<SubgroupFamily> suspected;  // first surviving family
    std::vector<FamilyExclusion> families;   // in the order above
    std::size_t signatures = 0;
    std::uint64_t aux_bound = 0;
    std::string evidence;
};

/// Below this many signatures a surviving family is reported as Undetermined.
inline constexpr std::size_t min_signatures_for_suspicion = 20;

/// Sieve on (a_q mod p, q mod p) for good primes q <= aux_bound, q != p.
/// Needs p >= 5 prime and aux_bound >= 50 (InvalidParams otherwise); throws
/// BudgetExceeded when the summed counting work exceeds the enumeration budget.
SurjectivityVerdict surjectivity_test(const Curve& c, std::uint64_t p, std::uint64_t aux_bound);

}  // namespace galrep::ecq
