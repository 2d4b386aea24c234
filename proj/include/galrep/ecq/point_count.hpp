#pragma once

#include "galrep/ecq/curve.hpp"

namespace galrep::ecq {

enum class CountMethod { CharacterSum, YLoop };

inline constexpr std::uint64_t max_count_prime = 100000;

/// #E(F_p) including the point at infinity, counted on the minimal model at
/// p >= 5 and on the given model at p in {2, 3}.
/// Throws BadReduction when the reduction at p is not good (or, for p in
/// {2, 3}, when p divides the discriminant of the given model),
/// BudgetExceeded for p > max_count_prime.
std::uint64_t count_points(const Curve& c, std::uint64_t p, CountMethod method = CountMethod::CharacterSum);

/// a_p = p + 1 - #E(F_p).
std::int64_t a_p(const Curve& c, std::uint64_t p, CountMethod method = CountMethod::CharacterSum);

}  // namespace galrep::ecq
