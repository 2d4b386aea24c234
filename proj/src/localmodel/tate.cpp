#include "galrep/error.hpp"
#include "galrep/grpmod/sym_power.hpp"

#include "common.hpp"

namespace galrep::localmodel {

const char* to_string(TateVariant v) noexcept {
    switch (v) {
        case TateVariant::Split: return "split";
        case TateVariant::NonSplitUnramifiedTwist: return "nonsplit";
        case TateVariant::AdditiveRamifiedTwist: return "additive";
    }
    return "?";
}

const char* to_string(LocalCase c) noexcept {
    switch (c) {
        case LocalCase::A: return "A";
        case LocalCase::B: return "B";
        case LocalCase::C: return "C";
        case LocalCase::D: return "D";
        case LocalCase::Supersingular: return "supersingular";
    }
    return "?";
}

namespace detail {

void check_j(std::uint64_t p, unsigned j) {
    if (j < 1 || j + 2 > p)
        throw Error(ErrorKind::InvalidParams, "j must satisfy 1 <= j <= p-2 (got j=" + std::to_string(j) +
                                                  ", p=" + std::to_string(p) + ")");
}

Modulus checked_modulus(std::uint64_t p, unsigned level) {
    if (level == 0) throw Error(ErrorKind::InvalidParams, "level n must be positive");
    if (level > max_level_for(p))
        throw Error(ErrorKind::InvalidModulus, "p^n must stay below 2^62 (the limit probe uses two extra levels)");
    return Modulus(p, level);
}

grpmod::Invariants sym_invariants(const std::vector<ModularMatrix>& gens, unsigned j, const Modulus& mod) {
    std::vector<ModularMatrix> actions;
    for (const auto& g : gens) actions.push_back(grpmod::sym_power(g, j));
    return grpmod::fixed_submodule(actions, j + 1, mod);
}

LimitData limit_from_levels(const AbelianPGroupType& at_n, unsigned n, const AbelianPGroupType& at_n1) {
    auto torsion = [](const AbelianPGroupType& t, unsigned level) {
        std::vector<unsigned> out;
        for (auto e : t.exponents())
            if (e < level) out.push_back(e);
        return out;
    };
    const auto free_n = at_n.count(n), free_n1 = at_n1.count(n + 1);
    const auto tors = torsion(at_n, n);
    if (free_n != free_n1 || tors != torsion(at_n1, n + 1))
        throw Error(ErrorKind::InvalidParams, "invariants did not stabilize between levels " + std::to_string(n) +
                                                  " and " + std::to_string(n + 1));
    return {static_cast<unsigned>(tors.size()), static_cast<unsigned>(free_n)};
}

}  // namespace detail

std::vector<ModularMatrix> tate_generators(const TateModel& model, unsigned level) {
    const Modulus mod(model.p, level);
    std::vector<ModularMatrix> gens{
        ModularMatrix(mod, {{1, static_cast<std::int64_t>(mod.p_power(model.t))}, {0, 1}})};
    // the unramified twist is invisible on inertia; the ramified one contributes -1
    if (model.variant == TateVariant::AdditiveRamifiedTwist) gens.push_back(ModularMatrix::scalar(2, -1, mod));
    return gens;
}

LocalH0Report tate_h0(const TateModel& model, Method method) {
    detail::check_j(model.p, model.j);
    if (model.t > model.n) throw Error(ErrorKind::InvalidParams, "t must satisfy 0 <= t <= n");
    const auto mod = detail::checked_modulus(model.p, model.n);
    const unsigned probe = model.n + 1;
    (void)detail::checked_modulus(model.p, probe + 1);

    LocalH0Report r;
    r.p = model.p;
    r.level = model.n;
    r.j = model.j;
    const bool vanishes = model.variant == TateVariant::AdditiveRamifiedTwist && model.j % 2 == 1;
    r.trace.push_back({"tate-unipotent-invariants",
                       "x = sum a_i u_i is fixed iff a_i tau = 0 for 1 <= i <= j; tau(inertia) = p^" +
                           std::to_string(model.t) + " Z/p^" + std::to_string(model.n)});
    if (model.variant == TateVariant::NonSplitUnramifiedTwist)
        r.trace.push_back({"unramified-twist-descent",
                           "the quadratic unramified twist is trivial on inertia, so the split computation applies"});
    if (model.variant == TateVariant::AdditiveRamifiedTwist)
        r.trace.push_back({"ramified-twist-parity", "the ramified quadratic character acts on u_0 by (-1)^j = " +
                                                        std::string(model.j % 2 ? "-1" : "+1")});

    if (method == Method::ClosedForm) {
        r.method = "closed form";
        if (!vanishes) {
            std::vector<unsigned> exps{model.n};
            for (unsigned i = 0; i < model.j; ++i) exps.push_back(model.t);
            r.level_structure = AbelianPGroupType(exps);
            r.limit_quotient_dim = model.t >= 1 ? model.j : 0;
            r.h0_v_dim = 1;
        }
    } else {
        r.method = "brute force";
        auto inv = detail::sym_invariants(tate_generators(model, model.n), model.j, mod);
        r.level_structure = inv.type;
        r.generators = std::move(inv.generators);
        const auto a = detail::sym_invariants(tate_generators(model, probe), model.j, Modulus(model.p, probe));
        const auto b = detail::sym_invariants(tate_generators(model, probe + 1), model.j, Modulus(model.p, probe + 1));
        const auto lim = detail::limit_from_levels(a.type, probe, b.type);
        r.limit_quotient_dim = lim.quotient_dim;
        r.h0_v_dim = lim.free_rank;
    }
    r.note = "limit data for A^j_p follow from the invariants at levels " + std::to_string(probe) + " and " +
             std::to_string(probe + 1) + ", where tau(inertia) = p^t Z/p^N is already stable";
    if (model.variant == TateVariant::NonSplitUnramifiedTwist)
        r.note += "; the nonsplit case is a reconstructed descent, not a quoted computation";
    return r;
}

}  // namespace galrep::localmodel
