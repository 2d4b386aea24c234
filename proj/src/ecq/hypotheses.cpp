#include "galrep/ecq/hypotheses.hpp"

#include "galrep/ecq/factor.hpp"
#include "galrep/ecq/point_count.hpp"
#include "galrep/error.hpp"
#include "galrep/zring/modulus.hpp"

#include <sstream>

namespace galrep::ecq {

const char* to_string(Verdict v) noexcept {
    switch (v) {
        case Verdict::Satisfied: return "Satisfied";
        case Verdict::Violated: return "Violated";
        case Verdict::Undetermined: return "Undetermined";
    }
    return "?";
}

int HypothesisReport::exit_status() const {
    bool undetermined = false;
    for (const auto& c : checks) {
        if (c.verdict == Verdict::Violated) return 1;
        undetermined |= c.verdict == Verdict::Undetermined;
    }
    return undetermined ? 2 : 0;
}

namespace {

HypothesisCheck check_good(const ReductionData& r) {
    HypothesisCheck h{"(a′)", Verdict::Satisfied, {}, {}};
    std::ostringstream ev;
    ev << "reduction at p=" << r.l << " is " << to_string(r.tag) << " (v_p(disc_min)=" << r.v_disc_min << ")";
    if (r.tag != ReductionTag::Good) h.verdict = Verdict::Violated;
    h.evidence = ev.str();
    return h;
}

HypothesisCheck check_wild(HypothesisReport& rep) {
    HypothesisCheck h{"(b′)", Verdict::Satisfied, {}, {}};
    const auto p = rep.p;
    if (!rep.a_p) {
        h.evidence = "no good reduction at p, nothing to check";
        return h;
    }
    const zring::Modulus m(p, 1);
    const auto a = m.reduce(*rep.a_p);
    std::ostringstream ev;
    ev << "a_p=" << *rep.a_p;
    if (a == 0) {
        ev << ", supersingular";
        rep.local_case = localmodel::LocalCase::Supersingular;
    } else if (m.pow(a, rep.j) != 1) {
        ev << ", ordinary with a_p^" << rep.j << " = " << m.pow(a, rep.j) << " != 1 mod " << p;
        rep.local_case = localmodel::LocalCase::A;
    } else if (is_cm_j_invariant(rep.invariants.j)) {
        ev << ", ordinary with a_p^" << rep.j << " = 1 mod " << p << " and CM j-invariant " << rep.invariants.j;
        rep.local_case = localmodel::LocalCase::B;
    } else {
        ev << ", ordinary with a_p^" << rep.j << " = 1 mod " << p
           << " and no global CM; wild ramification of the residual representation is not computed, "
              "hypothesis (b′) left open";
        h.verdict = Verdict::Undetermined;
    }
    h.evidence = ev.str();
    return h;
}

HypothesisCheck check_tate_valuations(const HypothesisReport& rep) {
    HypothesisCheck h{"(c′)", Verdict::Satisfied, {}, {}};
    std::ostringstream ev;
    const auto& j = rep.invariants.j;
    if (denominator(j) == 1) {
        h.evidence = "j is integral, no potentially multiplicative primes";
        return h;
    }
    const auto f = factor(denominator(j));
    bool first = true;
    for (const auto& [l, e] : f.primes) {
        const auto lu = static_cast<std::uint64_t>(l);
        if (lu == rep.p) continue;  // bad reduction at p is (a′)'s concern
        const int v = valuation(j, lu);
        ev << (first ? "" : "; ") << "v_" << l << "(j)=" << v;
        first = false;
        if (lu >= 5) {
            const auto r = reduction_at(rep.curve, lu);
            ev << " " << to_string(r.tag);
            if (r.tag == ReductionTag::MultiplicativeSplit) ev << " (Tamagawa number c_l = " << -v << ")";
        }
        if (static_cast<std::uint64_t>(-v) % rep.p == 0 && h.verdict != Verdict::Violated) {
            h.verdict = Verdict::Violated;
            ev << " divisible by p";
            h.where = "at l=" + l.str();
        }
    }
    if (!f.complete()) {
        ev << (first ? "" : "; ") << "unfactored cofactor " << f.cofactor << " of den(j)";
        first = false;
        if (h.verdict != Verdict::Violated) h.verdict = Verdict::Undetermined;
    }
    h.evidence = first ? "no potentially multiplicative primes l != p" : ev.str();
    return h;
}

HypothesisCheck check_surjective(const SurjectivityVerdict& s) {
    HypothesisCheck h{"(d′)", Verdict::Undetermined, {}, s.evidence};
    if (s.tag == SurjectivityTag::Surjective) h.verdict = Verdict::Satisfied;
    return h;
}

}  // namespace

HypothesisReport check_hypotheses(const Curve& c, std::uint64_t p, unsigned j, std::optional<unsigned> sha_dim,
                                  std::uint64_t aux_bound) {
    if (p < 5 || !zring::is_prime(p)) throw Error(ErrorKind::InvalidParams, "p must be a prime >= 5");
    if (j < 1 || j + 2 > p)
        throw Error(ErrorKind::InvalidJ, "j = " + std::to_string(j) + " outside [1, " + std::to_string(p - 2) + "]");

    HypothesisReport rep;
    rep.curve = c;
    rep.p = p;
    rep.j = j;
    rep.sha_dim = sha_dim;
    rep.aux_bound = aux_bound;
    rep.invariants = invariants(c);
    rep.reduction = reduction_at(c, p);
    if (rep.reduction.tag == ReductionTag::Good) rep.a_p = a_p(c, p);
    rep.surjectivity = surjectivity_test(c, p, aux_bound);

    rep.checks.push_back(check_good(rep.reduction));
    rep.checks.push_back(check_wild(rep));
    rep.checks.push_back(check_tate_valuations(rep));
    rep.checks.push_back(check_surjective(rep.surjectivity));

    if (rep.local_case) {
        const bool limit_line = *rep.local_case == localmodel::LocalCase::B;
        rep.bound = localmodel::bound_dim_image(*rep.local_case, j, limit_line ? 1 : 0, 0);
    }

    const bool all = rep.exit_status() == 0;
    if (!all) {
        rep.message = "conclusion withheld: not every hypothesis is satisfied";
    } else if (!sha_dim) {
        rep.message = "supply --sha-dim ≥ " + std::to_string(j + 1);
    } else if (*sha_dim < j + 1) {
        rep.message = "supplied Sha dimension " + std::to_string(*sha_dim) + " is below j+1 = " + std::to_string(j + 1) +
                      "; conclusion withheld";
    } else {
        rep.conclusion =
            "Cl_K ⊗ F_p admits Sym^j E[p] as a quotient Galois module, conditional on the supplied Sha dimension";
        rep.message = "conclusion emitted";
    }
    return rep;
}

}  // namespace galrep::ecq
