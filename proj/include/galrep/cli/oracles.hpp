#pragma once

// Exhaustive oracles for the verification suite. Each one walks every
// candidate instead of calling the linear-algebra kernels, and refuses work
// above the enumeration budget.

#include "galrep/ecq/curve.hpp"
#include "galrep/zring/howell.hpp"

#include <span>
#include <vector>

namespace galrep::cli::oracles {

/// Twenty small-conductor curves as "a1,a2,a3,a4,a6".
std::span<const char* const> curve_corpus();

/// #E(F_p) on the given model by testing all p^2 affine pairs.
std::uint64_t naive_point_count(const ecq::Curve& c, std::uint64_t p);

/// Delta from the discriminant of the 2-division cubic 4x^3 + b2 x^2 + 2 b4 x + b6.
ecq::BigInt discriminant_from_cubic(const ecq::Curve& c);

/// Vectors of (Z/p^n)^rank fixed by every action matrix, as an abelian group
/// type. Throws BudgetExceeded when (p^n)^rank exceeds `budget`.
zring::AbelianPGroupType fixed_type_by_enumeration(std::span<const zring::ModularMatrix> actions, std::size_t rank,
                                                   const zring::Modulus& mod, std::uint64_t budget);

/// Number of a in W/p^n with a (u^j - 1) = 0 for every unit u of W/p^n.
std::uint64_t supersingular_fixed_count(std::uint64_t p, unsigned n, unsigned j, std::uint64_t budget);

}  // namespace galrep::cli::oracles
