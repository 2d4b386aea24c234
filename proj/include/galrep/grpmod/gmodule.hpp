#pragma once

#include "galrep/grpmod/matrix_group.hpp"
#include "galrep/zring/howell.hpp"

#include <functional>
#include <span>
#include <vector>

namespace galrep::grpmod {

using zring::AbelianPGroupType;
using zring::ModVector;

/// Free Z/p^n-module of finite rank on which a MatrixGroup acts. The action is
/// fixed on the group generators; when a functor is supplied (e.g. Sym^j) it
/// is also used to evaluate the action on arbitrary elements directly.
class GModule {
public:
    using Functor = std::function<ModularMatrix(const ModularMatrix&)>;

    GModule(MatrixGroup group, std::size_t rank, std::vector<ModularMatrix> generator_action);
    GModule(MatrixGroup group, std::size_t rank, Functor functor);

    static GModule trivial(MatrixGroup group, std::size_t rank);
    static GModule sym_power(MatrixGroup group, unsigned j, unsigned det_twist = 0);

    const MatrixGroup& group() const noexcept { return group_; }
    std::size_t rank() const noexcept { return rank_; }
    const Modulus& modulus() const noexcept { return group_.modulus(); }
    const std::vector<ModularMatrix>& generator_action() const noexcept { return gen_action_; }

    /// Action of an arbitrary group element (located in the closure when no
    /// functor is available).
    ModularMatrix act(const ModularMatrix& element, std::size_t cap = default_closure_cap) const;

    /// Actions of every closure element, in closure order. Verifies that the
    /// generator action respects all relations of the group, i.e. that
    /// act(x) act(s) = act(xs) along every edge of the closure; throws
    /// InvalidParams otherwise.
    std::vector<ModularMatrix> element_actions(std::size_t cap = default_closure_cap) const;

    /// Same module with the action conjugated by an invertible change of basis.
    GModule conjugated(const ModularMatrix& basis_change) const;

private:
    MatrixGroup group_;
    std::size_t rank_;
    std::vector<ModularMatrix> gen_action_;
    Functor functor_;
};

struct Invariants {
    AbelianPGroupType type;
    std::vector<ModVector> generators;
};

/// Simultaneous fixed submodule of the given action matrices, as the kernel
/// of the stacked (A - I).
Invariants fixed_submodule(std::span<const ModularMatrix> actions, std::size_t rank, const Modulus& mod);

/// Invariants of `module` under the subgroup generated by `subgroup_gens`.
Invariants invariants(const GModule& module, std::span<const ModularMatrix> subgroup_gens);

/// Invariants under the whole group.
Invariants invariants(const GModule& module);

/// Whether no proper nonzero subspace is stable under the group (n = 1 only).
/// Exhaustive over all lines when there are at most 10^6 of them; above that,
/// spins the standard basis and 32 seeded pseudo-random vectors.
bool is_irreducible(const GModule& module, std::size_t cap = default_closure_cap);

/// Submodule over F_p spanned by the orbit of v (echelon basis rows).
std::vector<std::vector<std::uint64_t>> spin(std::span<const ModularMatrix> actions, std::span<const std::uint64_t> v,
                                             std::uint64_t p);

}  // namespace galrep::grpmod
