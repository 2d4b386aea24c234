#pragma once

#include "galrep/localmodel/models.hpp"

namespace galrep::localmodel::detail {

inline constexpr unsigned max_level_for(std::uint64_t p) {
    unsigned n = 0;
    unsigned __int128 q = 1;
    while (q * p < (static_cast<unsigned __int128>(1) << 62)) {
        q *= p;
        ++n;
    }
    return n;
}

void check_j(std::uint64_t p, unsigned j);
Modulus checked_modulus(std::uint64_t p, unsigned level);

/// Invariants of Sym^j under the given 2x2 generators at their level.
grpmod::Invariants sym_invariants(const std::vector<ModularMatrix>& gens, unsigned j, const Modulus& mod);

struct LimitData {
    unsigned quotient_dim = 0;
    unsigned free_rank = 0;
};

/// Reads the limit of the finite-level invariants off two consecutive levels
/// N, N+1 beyond every model parameter: free summands grow with the level,
/// torsion summands stay put. Throws InvalidParams if neither pattern holds.
LimitData limit_from_levels(const AbelianPGroupType& at_n, unsigned n, const AbelianPGroupType& at_n1);

}  // namespace galrep::localmodel::detail
