#include "doctest.h"

#include "galrep/ecq/factor.hpp"
#include "galrep/ecq/hypotheses.hpp"
#include "galrep/ecq/point_count.hpp"
#include "galrep/error.hpp"
#include "galrep/zring/modulus.hpp"

#include <set>
#include <utility>

using namespace galrep;
using namespace galrep::ecq;

namespace {

const char* const corpus[] = {
    "0,-1,1,-10,-20",     "0,-1,1,-7820,-263580", "0,-1,1,0,0",   "1,0,1,4,-6",  "1,1,1,-10,-10",
    "1,-1,1,-1,-14",      "0,1,1,-9,-15",         "0,1,0,4,4",    "1,0,0,-4,-1", "0,-1,0,-4,4",
    "1,0,1,-5,-8",        "0,0,1,0,-7",           "0,0,0,4,0",    "0,0,0,0,1",   "0,0,1,-1,0",
    "0,1,1,-23,-50",      "0,1,1,-2,0",           "0,0,1,-7,6",   "0,1,1,0,0",   "1,-1,1,0,0",
};

// Discriminant from the 2-division cubic 4x^3 + b2 x^2 + 2 b4 x + b6: 16 Delta = disc(cubic).
BigInt disc_from_cubic(const Curve& c) {
    const auto& [a1, a2, a3, a4, a6] = c.a;
    const BigInt b2 = a1 * a1 + 4 * a2, b4 = 2 * a4 + a1 * a3, b6 = a3 * a3 + 4 * a6;
    const BigInt A = 4, B = b2, C = 2 * b4, D = b6;
    const BigInt d = B * B * C * C - 4 * A * C * C * C - 4 * B * B * B * D - 27 * A * A * D * D + 18 * A * B * C * D;
    REQUIRE(d % 16 == 0);
    return d / 16;
}

// Every (x, y) pair on the given model, plus the point at infinity.
std::uint64_t naive_count(const Curve& c, std::uint64_t p) {
    std::int64_t a[5];
    for (int i = 0; i < 5; ++i) a[i] = static_cast<std::int64_t>(mod_u64(c.a[i], p));
    const auto P = static_cast<std::int64_t>(p);
    std::uint64_t n = 1;
    for (std::int64_t x = 0; x < P; ++x)
        for (std::int64_t y = 0; y < P; ++y) {
            const auto lhs = (y * y + a[0] * x % P * y + a[2] * y) % P;
            const auto rhs = ((x * x % P) * x + a[1] * (x * x % P) + a[3] * x + a[4]) % P;
            n += lhs == rhs;
        }
    return n;
}

using TraceDet = std::pair<std::uint64_t, std::uint64_t>;

struct M2 {
    std::uint64_t a, b, c, d;
};

M2 mul(const zring::Modulus& m, const M2& x, const M2& y) {
    return {m.add(m.mul(x.a, y.a), m.mul(x.b, y.c)), m.add(m.mul(x.a, y.b), m.mul(x.b, y.d)),
            m.add(m.mul(x.c, y.a), m.mul(x.d, y.c)), m.add(m.mul(x.c, y.b), m.mul(x.d, y.d))};
}

TraceDet td(const zring::Modulus& m, const M2& x) {
    return {m.add(x.a, x.d), m.sub(m.mul(x.a, x.d), m.mul(x.b, x.c))};
}

// (trace, det) pairs realized by elements of each maximal subgroup family of GL_2(F_p).
std::set<TraceDet> family_pairs(SubgroupFamily f, std::uint64_t p) {
    const zring::Modulus m(p, 1);
    std::set<TraceDet> out;
    switch (f) {
        case SubgroupFamily::Borel:
            for (std::uint64_t x = 1; x < p; ++x)
                for (std::uint64_t y = 1; y < p; ++y) out.insert(td(m, {x, 1, 0, y}));
            break;
        case SubgroupFamily::SplitCartanNormalizer:
            for (std::uint64_t x = 1; x < p; ++x)
                for (std::uint64_t y = 1; y < p; ++y) {
                    out.insert(td(m, {x, 0, 0, y}));
                    out.insert(td(m, {0, x, y, 0}));
                }
            break;
        case SubgroupFamily::NonSplitCartanNormalizer: {
            std::uint64_t nu = 2;
            while (m.pow(nu, (p - 1) / 2) == 1) ++nu;
            const M2 sigma{1, 0, 0, p - 1};
            for (std::uint64_t x = 0; x < p; ++x)
                for (std::uint64_t y = 0; y < p; ++y) {
                    if (x == 0 && y == 0) continue;
                    const M2 e{x, m.mul(nu, y), y, x};
                    out.insert(td(m, e));
                    out.insert(td(m, mul(m, e, sigma)));
                }
            break;
        }
        case SubgroupFamily::Exceptional:
            // elements whose projective order is at most 5
            for (std::uint64_t a = 0; a < p; ++a)
                for (std::uint64_t b = 0; b < p; ++b)
                    for (std::uint64_t c = 0; c < p; ++c)
                        for (std::uint64_t d = 0; d < p; ++d) {
                            const M2 g{a, b, c, d};
                            if (td(m, g).second == 0) continue;
                            M2 pw = g;
                            for (int r = 1; r <= 5; ++r) {
                                if (pw.b == 0 && pw.c == 0 && pw.a == pw.d) {
                                    out.insert(td(m, g));
                                    break;
                                }
                                pw = mul(m, pw, g);
                            }
                        }
            break;
    }
    return out;
}

// First good q whose Frobenius pair is outside the family, by the enumerated sets.
std::optional<std::uint64_t> oracle_exclusion(const Curve& c, std::uint64_t p, std::uint64_t bound, SubgroupFamily f) {
    const auto pairs = family_pairs(f, p);
    const auto disc = invariants(c).disc;
    for (std::uint64_t q = 2; q <= bound; ++q) {
        if (q == p || !zring::is_prime(q) || disc % q == 0) continue;
        const auto a = static_cast<std::int64_t>(q + 1) - static_cast<std::int64_t>(naive_count(c, q));
        const zring::Modulus m(p, 1);
        if (!pairs.count({m.reduce(a), q % p})) return q;
    }
    return std::nullopt;
}

}  // namespace

TEST_CASE("curve parsing") {
    const auto c = Curve::parse("0, -1,1,-10,-20");
    CHECK(c.a[1] == -1);
    CHECK(c.a[4] == -20);
    CHECK(c.to_string() == "[0,-1,1,-10,-20]");
    CHECK(Curve::parse("+3,0,0,123456789012345678901234567890,0").a[3] == BigInt("123456789012345678901234567890"));
    for (const char* bad : {"", "1,2,3,4", "1,2,3,4,5,6", "1,2,x,4,5", "1,,3,4,5", "1,2,3,4,-"})
        CHECK_THROWS_AS(Curve::parse(bad), Error);
}

TEST_CASE("standard invariants") {
    const auto e37 = invariants(Curve::parse("0,0,1,-1,0"));
    CHECK(e37.disc == 37);
    CHECK(e37.c4 == 48);
    CHECK(e37.j == Rational(110592, 37));

    const auto e11 = invariants(Curve::parse("0,-1,1,-10,-20"));
    CHECK(e11.disc == -161051);
    CHECK(e11.c6 == 20008);
    CHECK(valuation(e11.j, 11) == -5);

    try {
        (void)invariants(Curve::parse("0,0,0,0,0"));
        FAIL("expected SingularCurve");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::SingularCurve);
    }
    CHECK_THROWS_AS(invariants(Curve::parse("0,0,0,-3,2")), Error);  // node at x = 1

    for (const char* s : corpus) {
        CAPTURE(s);
        const auto c = Curve::parse(s);
        const auto inv = invariants(c);
        CHECK(inv.c4 * inv.c4 * inv.c4 - inv.c6 * inv.c6 == 1728 * inv.disc);
        CHECK(inv.disc == disc_from_cubic(c));
        CHECK(4 * inv.b8 == inv.b2 * inv.b6 - inv.b4 * inv.b4);
    }
}

TEST_CASE("valuations and cm table") {
    CHECK(valuation(BigInt(0), 5) == infinite_valuation);
    CHECK(valuation(BigInt(-250), 5) == 3);
    CHECK(valuation(Rational(3, 50), 5) == -2);
    CHECK(mod_u64(BigInt(-1), 7) == 6);
    CHECK(is_cm_j_invariant(Rational(0)));
    CHECK(is_cm_j_invariant(Rational(1728)));
    CHECK(is_cm_j_invariant(Rational(BigInt("-262537412640768000"))));
    CHECK_FALSE(is_cm_j_invariant(Rational(110592, 37)));
    CHECK_FALSE(is_cm_j_invariant(Rational(1729)));
}

TEST_CASE("factorization") {
    const auto f = factor(BigInt(-161051));
    REQUIRE(f.complete());
    REQUIRE(f.primes.size() == 1);
    CHECK(f.primes[0] == std::make_pair(BigInt(11), 5u));

    const BigInt big = BigInt("1000000007") * BigInt("998244353") * 12;
    const auto g = factor(big);
    REQUIRE(g.complete());
    BigInt back = 1;
    for (const auto& [q, e] : g.primes) {
        CHECK(is_probable_prime(q));
        back *= pow(q, e);
    }
    CHECK(back == big);
    CHECK(g.primes.back().first == BigInt("1000000007"));
    CHECK_FALSE(is_probable_prime(BigInt(561)));
}

TEST_CASE("reduction types") {
    const auto e11 = Curve::parse("0,-1,1,-10,-20");
    const auto r = reduction_at(e11, 11);
    CHECK(r.v_disc_min == 5);
    CHECK(r.v_c4_min == 0);
    CHECK(r.v_j == -5);
    // -c6 = -20008 = 1 mod 11
    CHECK(r.tag == ReductionTag::MultiplicativeSplit);
    CHECK(reduction_at(Curve::parse("0,0,1,-1,0"), 5).tag == ReductionTag::Good);

    for (std::uint64_t l : {2u, 3u}) {
        try {
            (void)reduction_at(e11, l);
            FAIL("expected SmallPrimeUnsupported");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::SmallPrimeUnsupported);
        }
    }
    CHECK_THROWS_AS(reduction_at(e11, 9), Error);

    // y^2 = x^3 + 5: additive, potentially good at 5
    CHECK(reduction_at(Curve::parse("0,0,0,0,5"), 5).tag == ReductionTag::AdditivePotentiallyGood);
    // quadratic twist of the short model of 11a1 by 11: y^2 = x^3 - 27 c4 d^2 x - 54 c6 d^3
    Curve apm;
    apm.a = {0, 0, 0, BigInt(-27) * 496 * 121, BigInt(-54) * 20008 * 1331};
    CHECK(valuation(invariants(apm).j, 11) == -5);
    CHECK(reduction_at(apm, 11).tag == ReductionTag::AdditivePotentiallyMultiplicative);

    for (const char* s : corpus) {
        const auto c = Curve::parse(s);
        const auto inv = invariants(c);
        for (std::uint64_t l = 5; l < 60; ++l) {
            if (!zring::is_prime(l)) continue;
            CAPTURE(s);
            CAPTURE(l);
            const auto red = reduction_at(c, l);
            const bool pot_mult = red.tag == ReductionTag::MultiplicativeSplit ||
                                  red.tag == ReductionTag::MultiplicativeNonSplit ||
                                  red.tag == ReductionTag::AdditivePotentiallyMultiplicative;
            CHECK(pot_mult == (valuation(inv.j, l) < 0));

            // split: a_l = 1, nonsplit: a_l = -1 counting the node, on the given (minimal) model
            if (red.scalings == 0 && (red.tag == ReductionTag::MultiplicativeSplit ||
                                      red.tag == ReductionTag::MultiplicativeNonSplit)) {
                const auto al = static_cast<std::int64_t>(l + 1) - static_cast<std::int64_t>(naive_count(c, l));
                CHECK(al == (red.tag == ReductionTag::MultiplicativeSplit ? 1 : -1));
            }

            const auto up = reduction_at(scaled(c, BigInt(l)), l);
            CHECK(up.tag == red.tag);
            CHECK(up.scalings == red.scalings + 1);
            CHECK(up.c4_min == red.c4_min);
            CHECK(up.disc_min == red.disc_min);
        }
    }
}

TEST_CASE("point counts") {
    CHECK(a_p(Curve::parse("0,0,0,1,0"), 5) == 2);
    CHECK(count_points(Curve::parse("0,0,0,1,0"), 5) == 4);
    CHECK(a_p(Curve::parse("0,0,0,0,1"), 5) == 0);
    CHECK(count_points(Curve::parse("0,0,0,0,1"), 5) == 6);
    CHECK(a_p(Curve::parse("0,0,1,-1,0"), 5) == -2);
    CHECK(a_p(Curve::parse("0,0,1,-1,0"), 5, CountMethod::YLoop) == -2);

    try {
        (void)a_p(Curve::parse("0,-1,1,-10,-20"), 11);
        FAIL("expected BadReduction");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::BadReduction);
    }
    CHECK_THROWS_AS(a_p(Curve::parse("0,0,1,-1,0"), 100003), Error);

    // good after minimalization: the 7-scaled model of 37a1 at 7
    CHECK(a_p(scaled(Curve::parse("0,0,1,-1,0"), BigInt(7)), 7) == a_p(Curve::parse("0,0,1,-1,0"), 7));

    for (const char* s : corpus) {
        const auto c = Curve::parse(s);
        const auto disc = invariants(c).disc;
        for (std::uint64_t p = 2; p <= 97; ++p) {
            if (!zring::is_prime(p)) continue;
            CAPTURE(s);
            CAPTURE(p);
            const bool good = p < 5 ? disc % p != 0 : reduction_at(c, p).tag == ReductionTag::Good;
            if (!good) {
                CHECK_THROWS_AS(a_p(c, p), Error);
                continue;
            }
            const auto x = a_p(c, p, CountMethod::CharacterSum);
            const auto y = a_p(c, p, CountMethod::YLoop);
            CHECK(x == y);
            CHECK(static_cast<double>(x * x) <= 4.0 * static_cast<double>(p));
            if (disc % p != 0)
                CHECK(x == static_cast<std::int64_t>(p + 1) - static_cast<std::int64_t>(naive_count(c, p)));
        }
    }
}

TEST_CASE("surjectivity sieve") {
    const auto e37 = Curve::parse("0,0,1,-1,0");
    const auto v = surjectivity_test(e37, 5, 1000);
    CHECK(v.tag == SurjectivityTag::Surjective);
    CHECK_FALSE(v.suspected);
    for (const auto& fam : v.families) {
        REQUIRE(fam.witness);
        CAPTURE(to_string(fam.family));
        CHECK(oracle_exclusion(e37, 5, 1000, fam.family) == fam.witness->q);
    }

    const auto e11 = Curve::parse("0,-1,1,-10,-20");
    const auto b = surjectivity_test(e11, 5, 1000);
    CHECK(b.tag == SurjectivityTag::NonSurjectiveSuspected);
    REQUIRE(b.suspected);
    CHECK(*b.suspected == SubgroupFamily::Borel);
    CHECK_FALSE(oracle_exclusion(e11, 5, 1000, SubgroupFamily::Borel));

    const auto cm = Curve::parse("0,0,0,0,1");
    const auto s = surjectivity_test(cm, 7, 500);
    CHECK(s.tag == SurjectivityTag::NonSurjectiveSuspected);
    REQUIRE(s.suspected);
    CHECK(*s.suspected == SubgroupFamily::SplitCartanNormalizer);
    CHECK(oracle_exclusion(cm, 7, 500, SubgroupFamily::Borel));
    CHECK_FALSE(oracle_exclusion(cm, 7, 500, SubgroupFamily::SplitCartanNormalizer));

    // every family verdict matches the enumerated subgroup oracle across the corpus
    for (const char* str : corpus) {
        const auto c = Curve::parse(str);
        for (std::uint64_t p : {5u, 7u}) {
            const auto r = surjectivity_test(c, p, 200);
            for (const auto& fam : r.families) {
                CAPTURE(str);
                CAPTURE(p);
                CAPTURE(to_string(fam.family));
                const auto o = oracle_exclusion(c, p, 200, fam.family);
                // the sieve also uses minimal models at primes dividing the given discriminant
                if (o && fam.witness) CHECK(fam.witness->q <= *o);
                if (!fam.witness) CHECK_FALSE(o);
            }
        }
    }

    CHECK_THROWS_AS(surjectivity_test(e37, 3, 1000), Error);
    CHECK_THROWS_AS(surjectivity_test(e37, 5, 10), Error);
}

TEST_CASE("hypothesis checker") {
    const auto e37 = Curve::parse("0,0,1,-1,0");
    const auto r = check_hypotheses(e37, 5, 2, 3u, 1000);
    REQUIRE(r.checks.size() == 4);
    for (const auto& c : r.checks) {
        CAPTURE(c.name);
        CAPTURE(c.evidence);
        CHECK(c.verdict == Verdict::Satisfied);
    }
    CHECK(r.a_p == -2);
    REQUIRE(r.local_case);
    CHECK(*r.local_case == localmodel::LocalCase::A);
    REQUIRE(r.bound);
    CHECK(r.bound->bound == 2);
    REQUIRE(r.conclusion);
    CHECK(r.conclusion->find("conditional on the supplied Sha dimension") != std::string::npos);
    CHECK(r.exit_status() == 0);

    const auto nosha = check_hypotheses(e37, 5, 2, std::nullopt, 1000);
    CHECK_FALSE(nosha.conclusion);
    CHECK(nosha.message == "supply --sha-dim ≥ 3");
    CHECK(nosha.exit_status() == 0);
    CHECK_FALSE(check_hypotheses(e37, 5, 2, 2u, 1000).conclusion);

    const auto e11 = check_hypotheses(Curve::parse("0,-1,1,-10,-20"), 5, 1, std::nullopt, 1000);
    CHECK(e11.checks[2].name == "(c′)");
    CHECK(e11.checks[2].verdict == Verdict::Violated);
    CHECK(e11.checks[2].where == "at l=11");
    CHECK(e11.checks[2].evidence.find("v_11(j)=-5") != std::string::npos);
    CHECK(e11.exit_status() == 1);
    CHECK_FALSE(e11.conclusion);

    // bad reduction at p violates (a′); (c′) only looks at l != p
    const auto bad = check_hypotheses(e37, 37, 2, 3u, 100);
    CHECK(bad.checks[0].verdict == Verdict::Violated);
    CHECK(bad.checks[2].verdict == Verdict::Satisfied);
    CHECK(bad.checks[2].evidence.find("v_37") == std::string::npos);
    CHECK(bad.exit_status() == 1);

    for (unsigned j : {0u, 4u}) {
        try {
            (void)check_hypotheses(e37, 5, j, std::nullopt, 1000);
            FAIL("expected InvalidJ");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::InvalidJ);
        }
    }

    const auto again = check_hypotheses(e37, 5, 2, 3u, 1000);
    CHECK(again.surjectivity.evidence == r.surjectivity.evidence);
    for (std::size_t k = 0; k < 4; ++k) CHECK(again.checks[k].evidence == r.checks[k].evidence);
}
