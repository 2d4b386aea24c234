#pragma once

#include "galrep/grpmod/gmodule.hpp"

#include <optional>
#include <span>
#include <string>

namespace galrep::cohom {

using grpmod::GModule;
using grpmod::MatrixGroup;
using zring::ModularMatrix;

inline constexpr std::size_t h1_group_cap = 512;
inline constexpr std::size_t h2_group_cap = 32;

/// A normal subgroup H with p not dividing |H| and V^H = 0; its existence
/// forces H^i(G, V) = 0 for every i.
struct VanishingWitness {
    std::vector<ModularMatrix> generators;
    std::size_t order = 0;
    std::string description;
};

struct CohomologyReport {
    std::size_t group_order = 0;
    std::size_t module_dim = 0;
    std::size_t h0 = 0;
    std::size_t z1 = 0, b1 = 0, h1 = 0;
    std::optional<std::size_t> z2, b2, h2;
    std::optional<VanishingWitness> witness;
    std::string method;
};

enum class H1Method {
    /// Unknowns are the cocycle values on the generators; the cocycle rule is
    /// imposed along every edge of the closure graph.
    Parametrized,
    /// Unknowns are all values f(g); the rule is imposed for every pair.
    Dense,
};

/// H^0 and H^1 over F_p by exact linear solving. Requires level 1 and
/// |G| <= cap.
CohomologyReport h1_bruteforce(const GModule& v, H1Method method = H1Method::Parametrized,
                               std::size_t cap = h1_group_cap);

/// Adds H^2 from normalized 2-cochains. Gated at |G| <= 32 by default.
CohomologyReport h2_bruteforce(const GModule& v, std::size_t cap = h2_group_cap);

/// Searches central cyclic subgroups <cI> of G, then the supplied candidate
/// subgroups, for a witness. Candidates that are not normal in G are skipped.
std::optional<VanishingWitness> vanishing_criterion(const GModule& v, std::span<const MatrixGroup> candidates = {},
                                                    std::size_t cap = default_closure_cap);

struct InflationRestrictionReport {
    std::size_t h1_quotient = 0;          // dim H^1(G/H, V^H)
    std::size_t h1_group = 0;             // dim H^1(G, V)
    std::size_t h1_normal_invariant = 0;  // dim H^1(H, V)^{G/H}
    std::size_t quotient_order = 0;
    std::size_t inflation_image = 0;
    bool inflation_injective = false;
    bool holds = false;
};

/// Checks inf <= dim H^1(G,V) <= inf + res together with injectivity of
/// inflation. Throws NotNormal when H is not a normal subgroup of G.
InflationRestrictionReport inflation_restriction_check(const GModule& v, const MatrixGroup& h_normal,
                                                       std::size_t cap = h1_group_cap);

}  // namespace galrep::cohom
