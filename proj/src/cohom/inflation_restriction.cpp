#include "galrep/cohom/cohomology.hpp"

#include "galrep/zring/prime_field.hpp"
#include "solver.hpp"

namespace galrep::cohom {

using detail::ActionTable;
using detail::Vec;
using zring::PrimeFieldEchelon;

InflationRestrictionReport inflation_restriction_check(const GModule& v, const MatrixGroup& h_normal, std::size_t cap) {
    const auto& mod = v.modulus();
    if (mod.level() != 1) throw Error(ErrorKind::InvalidParams, "cohomology is computed over F_p only (level 1)");
    const auto& group = v.group();
    const std::uint64_t p = mod.p();
    const std::size_t d = v.rank();

    auto cg = group.closure(cap);
    auto ch = h_normal.closure(cap);
    for (const auto& x : h_normal.generators())
        if (!cg->find(x)) throw Error(ErrorKind::NotNormal, "subgroup generator is not in the group");
    for (const auto& s : group.generators()) {
        const auto inv = s.inverse();
        for (const auto& x : h_normal.generators())
            if (!ch->find(s * x * inv)) throw Error(ErrorKind::NotNormal, "subgroup is not normal");
    }

    ActionTable tg{p, d, cg->right, v.element_actions(cap)};
    ActionTable th{p, d, ch->right, {}};
    for (const auto& x : ch->elements) th.act.push_back(tg.act[cg->at(x)]);

    // V^H in reduced echelon form, so coordinates are read off at the pivots
    PrimeFieldEchelon relations(p, d);
    for (std::size_t s = 0; s < th.gens(); ++s) {
        const auto& a = th.act[th.right[0][s]];
        for (std::size_t r = 0; r < d; ++r) {
            Vec row(a.row(r).begin(), a.row(r).end());
            row[r] = (row[r] + p - 1) % p;
            relations.add_row(row);
        }
    }
    PrimeFieldEchelon fixed(p, d);
    for (const auto& b : relations.nullspace()) fixed.add_row(b);
    const auto& basis = fixed.basis_rows();
    const auto& pivots = fixed.pivot_columns();
    const std::size_t e = basis.size();

    // cosets xH
    std::vector<std::size_t> label(cg->order(), static_cast<std::size_t>(-1));
    std::vector<std::size_t> reps;
    for (std::size_t x = 0; x < cg->order(); ++x) {
        if (label[x] != static_cast<std::size_t>(-1)) continue;
        for (const auto& h : ch->elements) label[cg->at(cg->elements[x] * h)] = reps.size();
        reps.push_back(x);
    }

    InflationRestrictionReport out;
    out.quotient_order = reps.size();

    const auto cgroup = detail::solve_parametrized(tg, true);
    out.h1_group = cgroup.z1 - cgroup.b1;

    if (e > 0) {
        ActionTable tq{p, e, {}, {}};
        for (std::size_t c = 0; c < reps.size(); ++c) {
            std::vector<std::size_t> row;
            for (std::size_t s = 0; s < tg.gens(); ++s) row.push_back(label[tg.right[reps[c]][s]]);
            tq.right.push_back(std::move(row));
            ModularMatrix a(e, e, mod);
            for (std::size_t i = 0; i < e; ++i) {
                const auto w = tg.act[reps[c]].apply(basis[i]);
                for (std::size_t j = 0; j < e; ++j) a.set_residue(j, i, w[pivots[j]]);
            }
            tq.act.push_back(std::move(a));
        }
        const auto cq = detail::solve_parametrized(tq, true);
        out.h1_quotient = cq.z1 - cq.b1;

        const std::size_t k = tg.gens();
        PrimeFieldEchelon image(p, k * d);
        for (const auto& b : cgroup.b_basis) image.add_row(b);
        const std::size_t base = image.rank();
        for (const auto& z : cq.z_basis) {
            Vec f(k * d, 0);
            for (std::size_t s = 0; s < k; ++s)
                for (std::size_t j = 0; j < e; ++j)
                    for (std::size_t r = 0; r < d; ++r)
                        f[s * d + r] = (f[s * d + r] + z[s * e + j] * basis[j][r]) % p;
            image.add_row(f);
        }
        out.inflation_image = image.rank() - base;
    }
    out.inflation_injective = out.inflation_image == out.h1_quotient;

    // G acts on Z^1(H, V) by (g.f)(h) = g f(g^-1 h g); count classes fixed modulo B^1(H, V)
    const auto chs = detail::solve_parametrized(th, true);
    const std::size_t a = chs.z_basis.size(), bh = chs.b_basis.size(), kh = th.gens(), kg = tg.gens();
    const std::size_t cols = a + kg * bh;
    PrimeFieldEchelon sys(p, std::max<std::size_t>(cols, 1));
    for (std::size_t s = 0; s < kg; ++s) {
        const auto& g = group.generators()[s];
        const auto ginv = g.inverse();
        const auto& ag = tg.act[tg.right[0][s]];
        std::vector<std::size_t> conj(kh);
        for (std::size_t t = 0; t < kh; ++t) conj[t] = ch->at(ginv * h_normal.generators()[t] * g);
        std::vector<Vec> moved(a);
        for (std::size_t i = 0; i < a; ++i) {
            Vec w(kh * d);
            for (std::size_t t = 0; t < kh; ++t) {
                const auto val = ag.apply(detail::evaluate(chs, conj[t], chs.z_basis[i], d, p));
                for (std::size_t r = 0; r < d; ++r) w[t * d + r] = (val[r] + p - chs.z_basis[i][t * d + r]) % p;
            }
            moved[i] = std::move(w);
        }
        for (std::size_t row = 0; row < kh * d; ++row) {
            Vec eq(std::max<std::size_t>(cols, 1), 0);
            for (std::size_t i = 0; i < a; ++i) eq[i] = moved[i][row];
            for (std::size_t l = 0; l < bh; ++l) eq[a + s * bh + l] = (p - chs.b_basis[l][row]) % p;
            sys.add_row(eq);
        }
    }
    out.h1_normal_invariant = (cols - sys.rank()) - bh;

    out.holds = out.inflation_injective && out.h1_quotient <= out.h1_group &&
                out.h1_group <= out.h1_quotient + out.h1_normal_invariant;
    return out;
}

}  // namespace galrep::cohom
