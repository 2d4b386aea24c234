#include "doctest.h"
#include "enum_oracle.hpp"

#include "galrep/grpmod/sym_power.hpp"
#include "galrep/localmodel/bound.hpp"
#include "galrep/zring/quadratic_ring.hpp"

using namespace galrep;
using namespace galrep::localmodel;
using zring::AbelianPGroupType;

namespace {

bool same(const LocalH0Report& a, const LocalH0Report& b) {
    return a.level_structure == b.level_structure && a.limit_quotient_dim == b.limit_quotient_dim &&
           a.h0_v_dim == b.h0_v_dim && a.local_case == b.local_case;
}

std::uint64_t domain_size(const Modulus& mod, std::size_t rank) {
    std::uint64_t d = 1;
    for (std::size_t k = 0; k < rank; ++k) d *= mod.value();
    return d;
}

AbelianPGroupType enumerated_sym_type(const std::vector<ModularMatrix>& gens, unsigned j, const Modulus& mod) {
    std::vector<ModularMatrix> acts;
    for (const auto& g : gens) acts.push_back(grpmod::sym_power(g, j));
    return oracle::type_of_set(mod, oracle::fixed_by_enumeration(acts, mod, j + 1));
}

// a in W/p^n with a (u^j - 1) = 0 for every unit u
std::size_t supersingular_fixed_by_enumeration(std::uint64_t p, unsigned n, unsigned j) {
    zring::UnramifiedQuadraticRing w(Modulus(p, n));
    const auto units = w.units();
    std::size_t fixed = 0;
    const auto q = w.modulus().value();
    for (zring::Residue x = 0; x < q; ++x)
        for (zring::Residue y = 0; y < q; ++y) {
            const zring::UnramifiedQuadraticRing::Element a{x, y};
            bool ok = true;
            for (const auto& u : units) {
                if (!(w.mul(a, w.sub(w.pow(u, j), w.one())) == zring::UnramifiedQuadraticRing::Element{})) {
                    ok = false;
                    break;
                }
            }
            fixed += ok;
        }
    return fixed;
}

}  // namespace

TEST_CASE("tate examples") {
    auto r = tate_h0({5, 1, 2, 0, TateVariant::Split}, Method::ClosedForm);
    CHECK(r.level_structure == AbelianPGroupType({1}));
    CHECK(r.limit_quotient_dim == 0);

    r = tate_h0({5, 2, 1, 2, TateVariant::Split}, Method::BruteForce);
    CHECK(r.level_structure == AbelianPGroupType({2, 2}));

    TateModel m{5, 2, 2, 1, TateVariant::Split};
    r = tate_h0(m, Method::BruteForce);
    CHECK(r.level_structure == AbelianPGroupType({2, 1, 1}));
    CHECK(r.level_structure == enumerated_sym_type(tate_generators(m, 2), 2, Modulus(5, 2)));
    CHECK(same(r, tate_h0(m, Method::ClosedForm)));

    r = tate_h0({5, 1, 3, 0, TateVariant::AdditiveRamifiedTwist}, Method::BruteForce);
    CHECK(r.level_structure.is_trivial());

    CHECK_THROWS_AS(tate_h0({5, 1, 4, 0, TateVariant::Split}, Method::ClosedForm), Error);
    CHECK_THROWS_AS(tate_h0({5, 1, 2, 2, TateVariant::Split}, Method::ClosedForm), Error);
}

TEST_CASE("tate closed form equals brute force over the sweep") {
    std::size_t enumerated = 0;
    for (std::uint64_t p : {3, 5, 7})
        for (unsigned n = 1; n <= 2; ++n)
            for (unsigned j = 1; j + 2 <= p; ++j)
                for (unsigned t = 0; t <= n; ++t)
                    for (auto v : {TateVariant::Split, TateVariant::NonSplitUnramifiedTwist,
                                   TateVariant::AdditiveRamifiedTwist}) {
                        TateModel m{p, n, j, t, v};
                        const auto closed = tate_h0(m, Method::ClosedForm);
                        const auto brute = tate_h0(m, Method::BruteForce);
                        CHECK_MESSAGE(same(closed, brute), "p=", p, " n=", n, " j=", j, " t=", t);
                        if (t == 0) CHECK(closed.limit_quotient_dim == 0);
                        const Modulus mod(p, n);
                        if (domain_size(mod, j + 1) <= 1'000'000) {
                            ++enumerated;
                            CHECK(brute.level_structure == enumerated_sym_type(tate_generators(m, n), j, mod));
                        }
                    }
    CHECK(enumerated > 50);
}

TEST_CASE("ramified twist parity law") {
    for (std::uint64_t p : {3, 5, 7})
        for (unsigned n = 1; n <= 2; ++n)
            for (unsigned j = 1; j + 2 <= p; ++j) {
                const auto r = tate_h0({p, n, j, 0, TateVariant::AdditiveRamifiedTwist}, Method::BruteForce);
                if (j % 2 == 1) {
                    CHECK(r.level_structure.is_trivial());
                } else {
                    CHECK(r.level_structure == AbelianPGroupType({n}));
                    REQUIRE(r.generators.size() == 1);
                    for (unsigned i = 1; i <= j; ++i) CHECK(r.generators[0][i] == 0);
                }
            }
}

TEST_CASE("supersingular") {
    for (auto [p, n, j] : {std::tuple<std::uint64_t, unsigned, unsigned>{5, 1, 1}, {5, 2, 3}, {7, 1, 2}}) {
        const auto r = supersingular_h0({p, n, j}, Method::BruteForce);
        CHECK(r.level_structure.is_trivial());
        CHECK(r.limit_quotient_dim == 0);
        CHECK(r.h0_v_dim == 0);
        CHECK(same(r, supersingular_h0({p, n, j})));
        CHECK(supersingular_fixed_by_enumeration(p, n, j) == 1);
    }
    // the same holds for the Z/p^n symmetric power of W/p^n
    for (std::uint64_t p : {5, 7})
        for (unsigned j = 1; j + 2 <= p; ++j) {
            zring::UnramifiedQuadraticRing w(Modulus(p, 1));
            std::vector<ModularMatrix> gens;
            for (const auto& u : w.unit_group_generators()) gens.push_back(w.multiplication_matrix(u));
            CHECK(enumerated_sym_type(gens, j, Modulus(p, 1)).is_trivial());
        }
}

TEST_CASE("ordinary examples") {
    auto r = ordinary_h0({5, 1, 2, 1, 0}, Method::BruteForce);
    CHECK(r.local_case == LocalCase::A);
    CHECK(r.limit_quotient_dim == 0);
    CHECK(r.h0_v_dim == 0);

    r = ordinary_h0({5, 2, 1, std::nullopt, 1}, Method::BruteForce);
    CHECK(r.local_case == LocalCase::B);
    CHECK(r.level_structure == AbelianPGroupType({1}));
    CHECK(r.limit_quotient_dim == 1);
    CHECK(r.h0_v_dim == 0);

    r = ordinary_h0({5, 2, 1, 0u, 2}, Method::BruteForce);
    CHECK(r.local_case == LocalCase::C);
    CHECK(r.level_structure.is_trivial());
    CHECK(r.limit_quotient_dim == 0);

    r = ordinary_h0({5, 2, 1, 1u, 2}, Method::BruteForce);
    CHECK(r.local_case == LocalCase::D);
    CHECK(r.level_structure == AbelianPGroupType({1}));
    CHECK(r.limit_quotient_dim == 1);
}

TEST_CASE("ordinary table sweep") {
    const std::vector<std::optional<unsigned>> ms{0u, 1u, 2u, std::nullopt};
    for (std::uint64_t p : {5, 7})
        for (unsigned n = 1; n <= 2; ++n)
            for (unsigned j = 1; j + 2 <= p; ++j)
                for (const auto& m : ms)
                    for (unsigned s = 0; s <= 2; ++s) {
                        OrdinaryModel model{p, n, j, m, s};
                        const auto closed = ordinary_h0(model, Method::ClosedForm);
                        const auto brute = ordinary_h0(model, Method::BruteForce);
                        CHECK(same(closed, brute));
                        unsigned e = s == 0 ? 0 : std::min(n, s);
                        if (m) e = std::min(e, *m);
                        CHECK(brute.level_structure == (e ? AbelianPGroupType({e}) : AbelianPGroupType()));
                        const unsigned want = (brute.local_case == LocalCase::B || brute.local_case == LocalCase::D);
                        CHECK(brute.limit_quotient_dim == want);
                        CHECK(brute.h0_v_dim == 0);
                        const Modulus mod(p, n);
                        if (domain_size(mod, j + 1) <= 1'000'000)
                            CHECK(brute.level_structure == enumerated_sym_type(ordinary_generators(model, n), j, mod));
                    }
}

TEST_CASE("potentially good") {
    const Modulus m25(5, 2);
    auto r = potentially_good_h0({5, 2, 2, {ModularMatrix::identity(2, m25)}});
    CHECK(r.level_structure == AbelianPGroupType({2, 2, 2}));
    CHECK(r.limit_quotient_dim == 0);
    CHECK(r.h0_v_dim == 3);

    CHECK_THROWS_AS(potentially_good_h0({5, 2, 1, {ModularMatrix(m25, {{2, 0}, {0, 3}})}}), Error);
    try {
        potentially_good_h0({5, 2, 1, {ModularMatrix(m25, {{2, 0}, {0, 3}})}});
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotPrimeToP);
    }
    r = potentially_good_h0({5, 2, 1, {ModularMatrix(m25, {{7, 0}, {0, 18}})}});
    CHECK(grpmod::MatrixGroup::cyclic(ModularMatrix(m25, {{7, 0}, {0, 18}})).order() == 4);
    CHECK(r.level_structure.is_trivial());
    CHECK(r.limit_quotient_dim == 0);

    r = potentially_good_h0({5, 2, 2, {ModularMatrix::scalar(2, -1, m25)}});
    CHECK(r.level_structure == AbelianPGroupType({2, 2, 2}));

    // order 3 mod 7^2 acting on Sym^3
    const Modulus m49(7, 2);
    ModularMatrix g(m49, {{0, -1}, {1, -1}});
    r = potentially_good_h0({7, 2, 3, {g}});
    CHECK(r.level_structure.rank() == r.h0_v_dim);
    CHECK(r.level_structure == enumerated_sym_type({g}, 3, m49));
}

TEST_CASE("bound") {
    auto b = bound_dim_image(LocalCase::A, 2, 0, 0);
    CHECK(b.bound == 2);
    b = bound_dim_image(LocalCase::B, 3, 1, 0);
    CHECK(b.raw == 4);
    CHECK(b.bound == 3);
    CHECK(b.refined);
    b = bound_dim_image(LocalCase::D, 1, 1, 0);
    CHECK(b.excluded_by_b_prime);
    CHECK_THROWS_AS(bound_dim_image(LocalCase::A, 2, 1, 0), Error);

    const std::vector<std::optional<unsigned>> ms{0u, 1u, 2u, std::nullopt};
    for (std::uint64_t p : {5, 7})
        for (unsigned j = 1; j + 2 <= p; ++j) {
            for (const auto& m : ms)
                for (unsigned s = 0; s <= 2; ++s) {
                    const auto r = ordinary_h0({p, 1, j, m, s}, Method::BruteForce);
                    const auto bd = bound_dim_image(*r.local_case, j, r.limit_quotient_dim, r.h0_v_dim);
                    if (*r.local_case == LocalCase::D) {
                        CHECK(bd.excluded_by_b_prime);
                    } else {
                        CHECK(bd.bound <= j);
                    }
                    if (*r.local_case == LocalCase::B) CHECK(bd.raw == j + 1);
                }
            const auto ss = supersingular_h0({p, 1, j}, Method::BruteForce);
            CHECK(bound_dim_image(LocalCase::Supersingular, j, ss.limit_quotient_dim, ss.h0_v_dim).bound == j);
        }
}
