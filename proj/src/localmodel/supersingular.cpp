#include "galrep/error.hpp"
#include "galrep/zring/quadratic_ring.hpp"

#include "common.hpp"

namespace galrep::localmodel {

std::vector<ModularMatrix> supersingular_actions(const SupersingularModel& model, unsigned level) {
    const zring::UnramifiedQuadraticRing w(Modulus(model.p, level));
    std::vector<ModularMatrix> out;
    for (const auto& u : w.unit_group_generators()) out.push_back(w.multiplication_matrix(w.pow(u, model.j)));
    return out;
}

LocalH0Report supersingular_h0(const SupersingularModel& model, Method method) {
    detail::check_j(model.p, model.j);
    const auto mod = detail::checked_modulus(model.p, model.n);
    (void)detail::checked_modulus(model.p, model.n + 2);

    LocalH0Report r;
    r.p = model.p;
    r.level = model.n;
    r.j = model.j;
    r.local_case = LocalCase::Supersingular;
    r.trace.push_back({"lubin-tate-invariants",
                       "a y_n is fixed iff a (chi_LT(g)^j - 1) = 0; j < p-1 gives a unit value, so a = 0"});
    if (method == Method::ClosedForm) {
        r.method = "closed form";
    } else {
        r.method = "brute force";
        auto inv = grpmod::fixed_submodule(supersingular_actions(model, model.n), 2, mod);
        r.level_structure = inv.type;
        r.generators = std::move(inv.generators);
        const unsigned probe = model.n + 1;
        const auto a = grpmod::fixed_submodule(supersingular_actions(model, probe), 2, Modulus(model.p, probe));
        const auto b = grpmod::fixed_submodule(supersingular_actions(model, probe + 1), 2, Modulus(model.p, probe + 1));
        const auto lim = detail::limit_from_levels(a.type, probe, b.type);
        r.limit_quotient_dim = lim.quotient_dim;
        r.h0_v_dim = lim.free_rank;
    }
    r.note = "the unit character of W/p^n stands in for chi_LT; invariants vanish at every level";
    return r;
}

}  // namespace galrep::localmodel
