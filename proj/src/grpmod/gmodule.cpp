#include "galrep/grpmod/gmodule.hpp"

#include "galrep/grpmod/sym_power.hpp"

namespace galrep::grpmod {

namespace {

void check_action(const MatrixGroup& group, std::size_t rank, const std::vector<ModularMatrix>& action) {
    if (rank == 0) throw Error(ErrorKind::InvalidParams, "module rank must be positive");
    if (action.size() != group.generators().size())
        throw Error(ErrorKind::DimensionMismatch, "one action matrix is required per group generator");
    for (const auto& a : action) {
        if (a.rows() != rank || a.cols() != rank) throw Error(ErrorKind::DimensionMismatch, "action matrix has wrong shape");
        if (!(a.modulus() == group.modulus())) throw Error(ErrorKind::InvalidModulus, "action modulus differs from group");
        if (!a.is_invertible()) throw Error(ErrorKind::InvalidParams, "action matrix is not invertible");
    }
}

}  // namespace

GModule::GModule(MatrixGroup group, std::size_t rank, std::vector<ModularMatrix> generator_action)
    : group_(std::move(group)), rank_(rank), gen_action_(std::move(generator_action)) {
    check_action(group_, rank_, gen_action_);
}

GModule::GModule(MatrixGroup group, std::size_t rank, Functor functor)
    : group_(std::move(group)), rank_(rank), functor_(std::move(functor)) {
    for (const auto& g : group_.generators()) gen_action_.push_back(functor_(g));
    check_action(group_, rank_, gen_action_);
}

GModule GModule::trivial(MatrixGroup group, std::size_t rank) {
    const auto mod = group.modulus();
    return GModule(std::move(group), rank, [rank, mod](const ModularMatrix&) { return ModularMatrix::identity(rank, mod); });
}

GModule GModule::sym_power(MatrixGroup group, unsigned j, unsigned det_twist) {
    if (group.dim() != 2) throw Error(ErrorKind::DimensionMismatch, "Sym^j needs a group of 2x2 matrices");
    return GModule(std::move(group), j + 1,
                   [j, det_twist](const ModularMatrix& g) { return sym_power_twisted(g, j, det_twist); });
}

ModularMatrix GModule::act(const ModularMatrix& element, std::size_t cap) const {
    if (functor_) return functor_(element);
    auto c = group_.closure(cap);
    const auto actions = element_actions(cap);
    return actions[c->at(element)];
}

std::vector<ModularMatrix> GModule::element_actions(std::size_t cap) const {
    auto c = group_.closure(cap);
    std::vector<ModularMatrix> out;
    out.reserve(c->order());
    out.push_back(ModularMatrix::identity(rank_, modulus()));
    for (std::size_t i = 1; i < c->order(); ++i) out.push_back(out[c->parent[i]] * gen_action_[c->via[i]]);
    for (std::size_t i = 0; i < c->order(); ++i)
        for (std::size_t s = 0; s < gen_action_.size(); ++s)
            if (!(out[i] * gen_action_[s] == out[c->right[i][s]]))
                throw Error(ErrorKind::InvalidParams, "generator action does not respect the group relations");
    return out;
}

GModule GModule::conjugated(const ModularMatrix& basis_change) const {
    const auto inv = basis_change.inverse();
    std::vector<ModularMatrix> action;
    for (const auto& a : gen_action_) action.push_back(inv * a * basis_change);
    if (functor_) {
        auto f = functor_;
        return GModule(group_, rank_, [f, inv, basis_change](const ModularMatrix& g) { return inv * f(g) * basis_change; });
    }
    return GModule(group_, rank_, std::move(action));
}

Invariants fixed_submodule(std::span<const ModularMatrix> actions, std::size_t rank, const Modulus& mod) {
    std::vector<ModularMatrix> blocks;
    for (const auto& a : actions) blocks.push_back(a - ModularMatrix::identity(rank, mod));
    Invariants out;
    if (blocks.empty()) {
        for (std::size_t i = 0; i < rank; ++i) {
            ModVector e(rank, 0);
            e[i] = 1 % mod.value();
            out.generators.push_back(std::move(e));
        }
    } else {
        out.generators = zring::kernel(ModularMatrix::vstack(blocks));
    }
    out.type = zring::structure(out.generators, mod);
    return out;
}

Invariants invariants(const GModule& module, std::span<const ModularMatrix> subgroup_gens) {
    std::vector<ModularMatrix> actions;
    for (const auto& g : subgroup_gens) actions.push_back(module.act(g));
    return fixed_submodule(actions, module.rank(), module.modulus());
}

Invariants invariants(const GModule& module) {
    return fixed_submodule(module.generator_action(), module.rank(), module.modulus());
}

}  // namespace galrep::grpmod
