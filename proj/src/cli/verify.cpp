#include "galrep/cli/verify.hpp"

#include "galrep/cli/oracles.hpp"
#include "galrep/cli/run.hpp"
#include "galrep/cohom/cohomology.hpp"
#include "galrep/ecq/point_count.hpp"
#include "galrep/error.hpp"
#include "galrep/grpmod/sym_power.hpp"
#include "galrep/localmodel/bound.hpp"

#include <chrono>
#include <functional>
#include <sstream>

namespace galrep::cli {

std::optional<Suite> parse_suite(const std::string& name) {
    if (name == "all") return Suite::All;
    if (name == "lemmas") return Suite::Lemmas;
    if (name == "local") return Suite::Local;
    if (name == "ecq") return Suite::Ecq;
    return std::nullopt;
}

namespace {

using cohom::GModule;
using cohom::MatrixGroup;
using localmodel::LocalCase;
using localmodel::LocalH0Report;
using localmodel::Method;
using zring::AbelianPGroupType;
using zring::Modulus;

// Enumeration oracles inside the sweeps only run below this many vectors.
constexpr std::uint64_t sweep_enumeration_cap = 200000;

// Collects failures; the first few are kept for the detail line.
struct Tally {
    std::size_t checks = 0;
    std::size_t failures = 0;
    std::vector<std::string> first;

    void expect(bool ok, const std::string& what) {
        ++checks;
        if (ok) return;
        ++failures;
        if (first.size() < 3) first.push_back(what);
    }
    bool ok() const { return failures == 0; }
    std::string summary() const {
        std::ostringstream os;
        os << checks << " checks, " << failures << " failed";
        for (const auto& f : first) os << "; " << f;
        return os.str();
    }
};

bool same(const LocalH0Report& a, const LocalH0Report& b) {
    return a.level_structure == b.level_structure && a.limit_quotient_dim == b.limit_quotient_dim &&
           a.h0_v_dim == b.h0_v_dim && a.local_case == b.local_case;
}

AbelianPGroupType cyclic_type(unsigned e) { return e == 0 ? AbelianPGroupType{} : AbelianPGroupType({e}); }

std::uint64_t ipow(std::uint64_t b, unsigned e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

std::string label(const std::string& head, std::initializer_list<std::pair<const char*, long long>> kv) {
    std::ostringstream os;
    os << head;
    for (const auto& [k, v] : kv) os << ' ' << k << '=' << v;
    return os.str();
}

CriterionResult vanishing_cross_check() {
    CriterionResult r{1, "vanishing criterion implies h1 = 0 on a suite of (G, V) pairs", false, {}, 0, 60};
    Tally t;
    std::size_t pairs = 0, witnessed = 0;
    for (std::uint64_t p : {3u, 5u}) {
        const Modulus mod(p, 1);
        std::vector<std::pair<std::string, MatrixGroup>> groups{
            {"GL2", MatrixGroup::general_linear(mod)},
            {"SL2", MatrixGroup::special_linear(mod)},
            {"Borel", MatrixGroup::borel(mod)},
            {"<2I>", MatrixGroup::cyclic(zring::ModularMatrix::scalar(2, 2, mod))},
        };
        for (const auto& [name, g] : groups)
            for (unsigned j = 0; j <= 3; ++j)
                for (unsigned twist = 0; twist <= 1; ++twist) {
                    const auto v = GModule::sym_power(g, j, twist);
                    if (g.order() > cohom::h1_group_cap || v.rank() > 4) continue;
                    ++pairs;
                    const auto w = cohom::vanishing_criterion(v);
                    if (!w) continue;
                    ++witnessed;
                    const auto rep = cohom::h1_bruteforce(v);
                    t.expect(rep.h0 == 0 && rep.h1 == 0,
                             name + "(F_" + std::to_string(p) + ") Sym^" + std::to_string(j) + " det^" +
                                 std::to_string(twist) + ": h1=" + std::to_string(rep.h1));
                }
    }
    t.expect(pairs >= 20, "fewer than 20 pairs");
    t.expect(witnessed > 0, "no witness found");
    r.passed = t.ok();
    r.detail = std::to_string(pairs) + " pairs, " + std::to_string(witnessed) + " witnessed; " + t.summary();
    return r;
}

CriterionResult gl2_reproduction() {
    CriterionResult r{2, "H^1(GL_2(F_p), Sym^j) = 0 for p = 3 and p = 5", false, {}, 0, 300};
    Tally t;
    {
        const auto v = GModule::sym_power(MatrixGroup::general_linear(Modulus(3, 1)), 1);
        t.expect(cohom::vanishing_criterion(v).has_value(), "GL2(F_3) Sym^1: no witness");
        t.expect(cohom::h1_bruteforce(v, cohom::H1Method::Dense).h1 == 0, "GL2(F_3) Sym^1: dense h1 != 0");
        t.expect(cohom::h1_bruteforce(v).h1 == 0, "GL2(F_3) Sym^1: h1 != 0");
    }
    const auto gl5 = MatrixGroup::general_linear(Modulus(5, 1));
    for (unsigned j = 1; j <= 3; ++j) {
        const auto v = GModule::sym_power(gl5, j);
        const auto w = cohom::vanishing_criterion(v);
        t.expect(w && w->order == 4, "GL2(F_5) Sym^" + std::to_string(j) + ": no order-4 central witness");
        if (j == 1) {
            t.expect(cohom::h1_bruteforce(v, cohom::H1Method::Dense).h1 == 0, "GL2(F_5) Sym^1: dense h1 != 0");
            t.expect(cohom::h1_bruteforce(v).h1 == 0, "GL2(F_5) Sym^1: h1 != 0");
        }
    }
    r.passed = t.ok();
    r.detail = t.summary();
    return r;
}

CriterionResult tate_equivalence() {
    CriterionResult r{3, "Tate model closed form equals brute force over the sweep", false, {}, 0, 120};
    Tally t;
    std::size_t enumerated = 0;
    for (std::uint64_t p : {3u, 5u, 7u})
        for (unsigned n = 1; n <= 2; ++n)
            for (unsigned j = 1; j + 2 <= p; ++j)
                for (unsigned tt = 0; tt <= n; ++tt)
                    for (auto var : {localmodel::TateVariant::Split, localmodel::TateVariant::NonSplitUnramifiedTwist,
                                     localmodel::TateVariant::AdditiveRamifiedTwist}) {
                        const localmodel::TateModel m{p, n, j, tt, var};
                        const auto c = localmodel::tate_h0(m, Method::ClosedForm);
                        const auto b = localmodel::tate_h0(m, Method::BruteForce);
                        const auto where = label(localmodel::to_string(var), {{"p", p}, {"n", n}, {"j", j}, {"t", tt}});
                        t.expect(same(c, b), where + ": closed " + c.level_structure.to_string(p) + " vs brute " +
                                                 b.level_structure.to_string(p));
                        if (tt == 0) t.expect(c.limit_quotient_dim == 0, where + ": limit quotient dim nonzero");
                        if (ipow(ipow(p, n), j + 1) <= sweep_enumeration_cap) {
                            ++enumerated;
                            std::vector<zring::ModularMatrix> acts;
                            for (const auto& g : localmodel::tate_generators(m, n)) acts.push_back(grpmod::sym_power(g, j));
                            const auto e = oracles::fixed_type_by_enumeration(acts, j + 1, Modulus(p, n),
                                                                              sweep_enumeration_cap);
                            t.expect(e == c.level_structure, where + ": enumeration disagrees");
                        }
                    }
    r.passed = t.ok();
    r.detail = t.summary() + "; " + std::to_string(enumerated) + " cases also enumerated";
    return r;
}

CriterionResult parity_law() {
    CriterionResult r{4, "ramified quadratic twist: H^0 = 0 for odd j, Z/p^n u_0 for even j", false, {}, 0, 0};
    Tally t;
    for (std::uint64_t p : {3u, 5u, 7u})
        for (unsigned n = 1; n <= 2; ++n)
            for (unsigned j = 1; j + 2 <= p; ++j)
                for (unsigned tt = 0; tt <= n; ++tt) {
                    const localmodel::TateModel m{p, n, j, tt, localmodel::TateVariant::AdditiveRamifiedTwist};
                    const auto h = localmodel::tate_h0(m, Method::BruteForce).level_structure;
                    const auto where = label("additive", {{"p", p}, {"n", n}, {"j", j}, {"t", tt}});
                    if (j % 2 == 1)
                        t.expect(h.is_trivial(), where + ": expected 0, got " + h.to_string(p));
                    else if (tt == 0)
                        t.expect(h == cyclic_type(n), where + ": expected Z/p^n, got " + h.to_string(p));
                }
    r.passed = t.ok();
    r.detail = t.summary();
    return r;
}

CriterionResult supersingular_vanishing() {
    CriterionResult r{5, "supersingular model: dims (0,0), unit enumeration confirms", false, {}, 0, 30};
    Tally t;
    for (std::uint64_t p : {5u, 7u})
        for (unsigned n = 1; n <= 2; ++n)
            for (unsigned j = 1; j + 2 <= p; ++j) {
                const localmodel::SupersingularModel m{p, n, j};
                const auto c = localmodel::supersingular_h0(m, Method::ClosedForm);
                const auto b = localmodel::supersingular_h0(m, Method::BruteForce);
                const auto where = label("ss", {{"p", p}, {"n", n}, {"j", j}});
                t.expect(c.limit_quotient_dim == 0 && c.h0_v_dim == 0, where + ": closed dims nonzero");
                t.expect(same(c, b) && b.level_structure.is_trivial(), where + ": brute force disagrees");
                t.expect(oracles::supersingular_fixed_count(p, n, j, enumeration_budget()) == 1,
                         where + ": unit enumeration finds nonzero invariants");
            }
    r.passed = t.ok();
    r.detail = t.summary();
    return r;
}

struct OrdinaryRow {
    std::uint64_t p;
    unsigned j;
    std::optional<unsigned> m;
    unsigned s;
};

std::vector<OrdinaryRow> ordinary_sweep() {
    std::vector<OrdinaryRow> rows;
    for (std::uint64_t p : {5u, 7u})
        for (unsigned j = 1; j + 2 <= p; ++j)
            for (auto m : {std::optional<unsigned>(0), std::optional<unsigned>(1), std::optional<unsigned>(2),
                           std::optional<unsigned>()})
                for (unsigned s = 0; s <= 2; ++s) rows.push_back({p, j, m, s});
    return rows;
}

CriterionResult ordinary_table() {
    CriterionResult r{6, "ordinary model reproduces the table (A)-(D) and Z/p^min(n,m,s)", false, {}, 0, 0};
    Tally t;
    for (const auto& row : ordinary_sweep()) {
        const LocalCase expect_case = row.s == 0 ? LocalCase::A
                                      : !row.m   ? LocalCase::B
                                      : *row.m == 0 ? LocalCase::C
                                                    : LocalCase::D;
        const unsigned expect_quot = expect_case == LocalCase::B || expect_case == LocalCase::D ? 1 : 0;
        for (unsigned n = 1; n <= 2; ++n) {
            const localmodel::OrdinaryModel m{row.p, n, row.j, row.m, row.s};
            const auto where = label("ordinary", {{"p", row.p}, {"n", n}, {"j", row.j},
                                                  {"m", row.m ? static_cast<long long>(*row.m) : -1}, {"s", row.s}});
            const auto c = localmodel::ordinary_h0(m, Method::ClosedForm);
            const auto b = localmodel::ordinary_h0(m, Method::BruteForce);
            t.expect(c.local_case == expect_case, where + ": wrong case");
            t.expect(c.limit_quotient_dim == expect_quot && c.h0_v_dim == 0, where + ": table dims differ");
            t.expect(same(c, b), where + ": closed form and brute force differ");
            const unsigned e = std::min({n, row.m.value_or(n), row.s});
            t.expect(b.level_structure == cyclic_type(e),
                     where + ": brute structure " + b.level_structure.to_string(row.p));
            if (ipow(ipow(row.p, n), row.j + 1) <= sweep_enumeration_cap) {
                std::vector<zring::ModularMatrix> acts;
                for (const auto& g : localmodel::ordinary_generators(m, n)) acts.push_back(grpmod::sym_power(g, row.j));
                t.expect(oracles::fixed_type_by_enumeration(acts, row.j + 1, Modulus(row.p, n), sweep_enumeration_cap) ==
                             cyclic_type(e),
                         where + ": enumeration differs");
            }
        }
    }
    r.passed = t.ok();
    r.detail = t.summary();
    return r;
}

CriterionResult bound_check() {
    CriterionResult r{7, "dim Im(Res^ur_p) <= j in cases A, B, C; B refined from j+1; D excluded", false, {}, 0, 0};
    Tally t;
    auto one = [&](LocalCase lc, unsigned j, unsigned q, unsigned v, const std::string& where) {
        const auto b = localmodel::bound_dim_image(lc, j, q, v);
        if (lc == LocalCase::D) {
            t.expect(b.excluded_by_b_prime, where + ": case D not flagged");
            return;
        }
        t.expect(b.bound <= j, where + ": bound " + std::to_string(b.bound) + " > j");
        if (lc == LocalCase::B) t.expect(b.raw == j + 1 && b.refined && b.bound == j, where + ": case B not refined");
    };
    for (const auto& row : ordinary_sweep())
        for (unsigned n = 1; n <= 2; ++n) {
            const auto c = localmodel::ordinary_h0({row.p, n, row.j, row.m, row.s}, Method::ClosedForm);
            one(*c.local_case, row.j, c.limit_quotient_dim, c.h0_v_dim,
                label(localmodel::to_string(*c.local_case), {{"p", row.p}, {"j", row.j}, {"s", row.s}}));
        }
    for (std::uint64_t p : {5u, 7u})
        for (unsigned j = 1; j + 2 <= p; ++j) {
            const auto c = localmodel::supersingular_h0({p, 1, j});
            one(LocalCase::Supersingular, j, c.limit_quotient_dim, c.h0_v_dim, label("ss", {{"p", p}, {"j", j}}));
        }
    r.passed = t.ok();
    r.detail = t.summary();
    return r;
}

CriterionResult ecq_identities() {
    CriterionResult r{8, "curve invariants identity, dual point counts and Hasse bound on the corpus", false, {}, 0, 60};
    Tally t;
    std::size_t counted = 0;
    for (const char* s : oracles::curve_corpus()) {
        const auto c = ecq::Curve::parse(s);
        const auto inv = ecq::invariants(c);
        t.expect(inv.c4 * inv.c4 * inv.c4 - inv.c6 * inv.c6 == 1728 * inv.disc, std::string(s) + ": c4^3 - c6^2");
        t.expect(inv.disc == oracles::discriminant_from_cubic(c), std::string(s) + ": discriminant oracle");
        for (std::uint64_t p = 2; p <= 97; ++p) {
            if (!zring::is_prime(p)) continue;
            const bool good =
                p < 5 ? inv.disc % p != 0 : ecq::reduction_at(c, p).tag == ecq::ReductionTag::Good;
            if (!good) continue;
            ++counted;
            const auto x = ecq::a_p(c, p, ecq::CountMethod::CharacterSum);
            const auto y = ecq::a_p(c, p, ecq::CountMethod::YLoop);
            const auto where = std::string(s) + " p=" + std::to_string(p);
            t.expect(x == y, where + ": counting methods differ");
            t.expect(static_cast<std::uint64_t>(x * x) <= 4 * p, where + ": Hasse bound");
            if (inv.disc % p != 0)
                t.expect(static_cast<std::int64_t>(p + 1 - oracles::naive_point_count(c, p)) == x,
                         where + ": naive count differs");
        }
    }
    r.passed = t.ok();
    r.detail = std::to_string(oracles::curve_corpus().size()) + " curves, " + std::to_string(counted) +
               " good (curve, p) pairs; " + t.summary();
    return r;
}

std::string without_timestamp(const std::string& json_text) {
    auto j = Json::parse(json_text);
    j.erase("timestamp");
    return j.dump();
}

CriterionResult end_to_end() {
    CriterionResult r{9, "end-to-end fixtures for 37a1 and 11a1", false, {}, 0, 30};
    Tally t;
    const std::vector<std::string> good{"check", "--curve", "0,0,1,-1,0", "--p", "5", "--j", "2", "--sha-dim", "3"};
    const auto text = run(good);
    t.expect(text.exit_code == exit_ok, "37a1: exit " + std::to_string(text.exit_code));
    t.expect(text.out.find("conclusion: Cl_K") != std::string::npos, "37a1: conclusion line missing");
    for (const char* name : {"(a′) satisfied", "(b′) satisfied", "(c′) satisfied", "(d′) satisfied"})
        t.expect(text.out.find(name) != std::string::npos, std::string("37a1: missing ") + name);

    auto json_args = good;
    json_args.insert(json_args.end(), {"--format", "json"});
    const auto first = run(json_args), second = run(json_args);
    t.expect(first.exit_code == exit_ok, "37a1 json: nonzero exit");
    t.expect(without_timestamp(first.out) == without_timestamp(second.out), "json output not deterministic");

    const auto bad = run({"check", "--curve", "0,-1,1,-10,-20", "--p", "5", "--j", "1"});
    t.expect(bad.exit_code == exit_violated, "11a1: exit " + std::to_string(bad.exit_code));
    t.expect(bad.out.find("(c′) violated at l=11") != std::string::npos, "11a1: violation line missing");
    r.passed = t.ok();
    r.detail = t.summary();
    return r;
}

CriterionResult timed(const std::function<CriterionResult()>& fn) {
    const auto start = std::chrono::steady_clock::now();
    CriterionResult r;
    try {
        r = fn();
    } catch (const std::exception& e) {
        r.detail = std::string("threw: ") + e.what();
        r.passed = false;
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (r.limit_seconds > 0 && r.seconds >= r.limit_seconds) {
        r.passed = false;
        r.detail += "; over the time limit";
    }
    return r;
}

}  // namespace

std::vector<CriterionResult> run_suite(Suite suite) {
    std::vector<std::pair<unsigned, std::function<CriterionResult()>>> all{
        {1, vanishing_cross_check}, {2, gl2_reproduction}, {3, tate_equivalence},
        {4, parity_law},            {5, supersingular_vanishing}, {6, ordinary_table},
        {7, bound_check},           {8, ecq_identities},   {9, end_to_end},
    };
    auto wanted = [&](unsigned id) {
        switch (suite) {
            case Suite::All: return true;
            case Suite::Lemmas: return id <= 2;
            case Suite::Local: return id >= 3 && id <= 7;
            case Suite::Ecq: return id >= 8;
        }
        return false;
    };
    std::vector<CriterionResult> out;
    double total = 0;
    for (const auto& [id, fn] : all) {
        if (!wanted(id)) continue;
        out.push_back(timed(fn));
        total += out.back().seconds;
    }
    if (suite == Suite::All) {
        CriterionResult r{10, "full suite finishes within the time limit", total < full_suite_limit_seconds, {}, total,
                          full_suite_limit_seconds};
        std::ostringstream os;
        os << "criteria 1-9 took " << total << " s";
        r.detail = os.str();
        out.push_back(r);
    }
    return out;
}

}  // namespace galrep::cli
