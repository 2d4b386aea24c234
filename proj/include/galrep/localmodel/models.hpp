#pragma once

#include "galrep/grpmod/gmodule.hpp"

#include <optional>
#include <string>
#include <vector>

namespace galrep::localmodel {

using zring::AbelianPGroupType;
using zring::ModularMatrix;
using zring::Modulus;
using zring::ModVector;

enum class Method { ClosedForm, BruteForce };

enum class TateVariant { Split, NonSplitUnramifiedTwist, AdditiveRamifiedTwist };

enum class LocalCase { A, B, C, D, Supersingular };

const char* to_string(TateVariant v) noexcept;
const char* to_string(LocalCase c) noexcept;

struct TraceEntry {
    std::string key;
    std::string detail;
};

/// H^0 of Sym^j at one finite level n, plus the data of the divisible limit:
/// limit_quotient_dim = dim H^0(A)/p H^0(A) and h0_v_dim = dim H^0(V).
struct LocalH0Report {
    std::uint64_t p = 0;
    unsigned level = 0;
    unsigned j = 0;
    AbelianPGroupType level_structure;
    std::vector<ModVector> generators;  // filled by BruteForce only
    unsigned limit_quotient_dim = 0;
    unsigned h0_v_dim = 0;
    std::optional<LocalCase> local_case;
    std::string method;
    std::string note;
    std::vector<TraceEntry> trace;
};

/// Inertia at l != p acting through [[1, tau],[0, 1]] with tau(inertia) =
/// p^t Z/p^n, optionally twisted by an unramified or ramified quadratic
/// character.
struct TateModel {
    std::uint64_t p = 5;
    unsigned n = 1;
    unsigned j = 1;
    unsigned t = 0;
    TateVariant variant = TateVariant::Split;
};

/// Inertia at p acting on W/p^n through the Lubin-Tate character, which
/// surjects onto the units of W/p^n.
struct SupersingularModel {
    std::uint64_t p = 5;
    unsigned n = 1;
    unsigned j = 1;
};

/// Decomposition group at p acting by [[chi psi^-1, u],[0, psi]]. m is the
/// diagonalizability level (nullopt for CM, where u vanishes) and s the exact
/// level with psi(Frob)^j = 1 mod p^s.
struct OrdinaryModel {
    std::uint64_t p = 5;
    unsigned n = 1;
    unsigned j = 1;
    std::optional<unsigned> m;
    unsigned s = 0;
};

/// Inertia image Phi, a finite group of order prime to p.
struct PotentiallyGoodModel {
    std::uint64_t p = 5;
    unsigned n = 1;
    unsigned j = 1;
    std::vector<ModularMatrix> image_generators;  // 2x2 over Z/p^n
};

/// Explicit generators of each model at an arbitrary level.
std::vector<ModularMatrix> tate_generators(const TateModel& model, unsigned level);
std::vector<ModularMatrix> ordinary_generators(const OrdinaryModel& model, unsigned level);
/// Action matrices on Sym^j (W/p^n viewed as Z/p^n-module of rank 2).
std::vector<ModularMatrix> supersingular_actions(const SupersingularModel& model, unsigned level);

LocalCase ordinary_case(const OrdinaryModel& model);

LocalH0Report tate_h0(const TateModel& model, Method method);
LocalH0Report supersingular_h0(const SupersingularModel& model, Method method = Method::ClosedForm);
LocalH0Report ordinary_h0(const OrdinaryModel& model, Method method);
LocalH0Report potentially_good_h0(const PotentiallyGoodModel& model);

}  // namespace galrep::localmodel
