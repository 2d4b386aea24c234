#include "galrep/error.hpp"

#include "common.hpp"

namespace galrep::localmodel {

LocalCase ordinary_case(const OrdinaryModel& model) {
    if (model.s == 0) return LocalCase::A;
    if (!model.m) return LocalCase::B;
    if (*model.m == 0) return LocalCase::C;
    return LocalCase::D;
}

std::vector<ModularMatrix> ordinary_generators(const OrdinaryModel& model, unsigned level) {
    const Modulus mod(model.p, level);
    const auto c = static_cast<std::int64_t>(mod.primitive_root());
    std::vector<ModularMatrix> gens{ModularMatrix(mod, {{c, 0}, {0, 1}})};
    if (model.m) gens.push_back(ModularMatrix(mod, {{1, static_cast<std::int64_t>(mod.p_power(*model.m))}, {0, 1}}));
    // psi(Frob) with psi(Frob)^j - 1 of valuation exactly s (j < p)
    const zring::Residue alpha =
        model.s == 0 ? mod.primitive_root() : mod.pow(1 + model.p % mod.value(), [&] {
            std::uint64_t e = 1;
            for (unsigned k = 1; k < model.s; ++k) e *= model.p;
            return e;
        }());
    gens.push_back(ModularMatrix(mod, {{static_cast<std::int64_t>(mod.inverse(alpha)), 0},
                                       {0, static_cast<std::int64_t>(alpha)}}));
    return gens;
}

LocalH0Report ordinary_h0(const OrdinaryModel& model, Method method) {
    detail::check_j(model.p, model.j);
    const auto mod = detail::checked_modulus(model.p, model.n);
    unsigned probe = std::max(model.n, model.s);
    if (model.m) probe = std::max(probe, *model.m);
    ++probe;
    (void)detail::checked_modulus(model.p, probe + 1);

    const auto c = ordinary_case(model);
    LocalH0Report r;
    r.p = model.p;
    r.level = model.n;
    r.j = model.j;
    r.local_case = c;
    const std::string m_text = model.m ? std::to_string(*model.m) : "inf";
    r.trace.push_back({"ordinary-table", std::string("case ") + to_string(c) + " (m=" + m_text +
                                             ", s=" + std::to_string(model.s) + ")"});
    r.trace.push_back({"ordinary-invariants", "Sym^j E[p^n]^{G_Q_p} = (p^{n-m} Z/p^n w_j)^{Frob=1}; a_j u_n(g) = 0 "
                                              "with u_n(G_{Q_p^ab}) = p^m Z/p^n taken as a model axiom"});
    if (method == Method::ClosedForm) {
        r.method = "closed form";
        unsigned e = 0;
        if (c == LocalCase::B) e = std::min(model.n, model.s);
        if (c == LocalCase::D) e = std::min({model.n, *model.m, model.s});
        if (e > 0) r.level_structure = AbelianPGroupType({e});
        r.limit_quotient_dim = (c == LocalCase::B || c == LocalCase::D) ? 1 : 0;
        r.h0_v_dim = 0;
    } else {
        r.method = "brute force";
        auto inv = detail::sym_invariants(ordinary_generators(model, model.n), model.j, mod);
        r.level_structure = inv.type;
        r.generators = std::move(inv.generators);
        const auto a = detail::sym_invariants(ordinary_generators(model, probe), model.j, Modulus(model.p, probe));
        const auto b =
            detail::sym_invariants(ordinary_generators(model, probe + 1), model.j, Modulus(model.p, probe + 1));
        const auto lim = detail::limit_from_levels(a.type, probe, b.type);
        r.limit_quotient_dim = lim.quotient_dim;
        r.h0_v_dim = lim.free_rank;
    }
    r.note = "finite generators (chi generator, u generator p^m, Frobenius realizing s) replace the profinite image; "
             "limit data read at levels " + std::to_string(probe) + ", " + std::to_string(probe + 1);
    return r;
}

}  // namespace galrep::localmodel
