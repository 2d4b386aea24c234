#include "doctest.h"
#include "enum_oracle.hpp"

#include "galrep/error.hpp"
#include "galrep/zring/howell.hpp"
#include "galrep/zring/prime_field.hpp"
#include "galrep/zring/quadratic_ring.hpp"

#include <random>

using namespace galrep;
using namespace galrep::zring;

namespace {

ModularMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, const Modulus& mod) {
    ModularMatrix m(r, c, mod);
    std::uniform_int_distribution<std::uint64_t> dist(0, mod.value() - 1);
    // bias toward p-divisible entries so non-unit pivots actually show up
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) {
            Residue x = dist(rng);
            if (rng() % 3 == 0) x = mod.mul(x, mod.p_power(1));
            m.set_residue(i, j, x);
        }
    return m;
}

std::set<ModVector> row_span(const ModularMatrix& m) {
    std::vector<ModVector> rows;
    for (std::size_t i = 0; i < m.rows(); ++i) rows.emplace_back(m.row(i).begin(), m.row(i).end());
    return oracle::span(m.modulus(), m.cols(), rows);
}

}  // namespace

TEST_CASE("modulus validation") {
    CHECK_THROWS_AS(Modulus(2, 1), Error);
    CHECK_THROWS_AS(Modulus(9, 1), Error);
    CHECK_THROWS_AS(Modulus(5, 0), Error);
    CHECK_THROWS_AS(Modulus(3, 40), Error);  // 3^40 > 2^62
    CHECK_NOTHROW(Modulus(3, 39));
    Modulus m(5, 2);
    CHECK(m.value() == 25);
    CHECK(m.valuation(0) == 2);
    CHECK(m.valuation(10) == 1);
    CHECK(m.mul(m.inverse(7), 7) == 1);
    CHECK_THROWS_AS(m.inverse(5), Error);
    CHECK(m.unit_order(m.primitive_root()) == 20);
}

TEST_CASE("matrix inverse and determinant") {
    Modulus m(5, 2);
    ModularMatrix a(m, {{2, 3}, {1, 3}});
    CHECK(a.is_invertible());
    CHECK((a * a.inverse()).is_identity());
    CHECK(a.determinant() == 3);
    CHECK(ModularMatrix(m, {{2, 3}, {1, 4}}).determinant() == 5);
    CHECK_FALSE(ModularMatrix(m, {{2, 3}, {1, 4}}).is_invertible());
    ModularMatrix b(m, {{5, 0}, {0, 1}});
    CHECK_FALSE(b.is_invertible());
    CHECK_THROWS_AS(b.inverse(), Error);
}

TEST_CASE("canonical_form examples") {
    Modulus m25(5, 2);
    SUBCASE("identity is already canonical") {
        auto id = ModularMatrix::identity(2, m25);
        CHECK(canonical_form(id) == id);
    }
    SUBCASE("[[5,0],[0,1]] keeps its row module") {
        ModularMatrix a(m25, {{5, 0}, {0, 1}});
        auto h = canonical_form(a);
        CHECK(row_span(h) == row_span(a));
        CHECK(row_span(a).size() == 125);  // 5 * 25 of the 625 combinations' images
        CHECK(h == a);
    }
    SUBCASE("zero matrix") {
        ModularMatrix z(3, 2, m25);
        CHECK(canonical_form(z) == z);
    }
    SUBCASE("annihilator rows are added") {
        ModularMatrix a(m25, {{5, 1}});
        auto h = canonical_form(a);
        CHECK(h.rows() == 2);
        CHECK(row_span(h) == row_span(a));
        CHECK(h == ModularMatrix(m25, {{5, 1}, {0, 5}}));
    }
}

TEST_CASE("canonical_form is idempotent and preserves the row module") {
    std::mt19937_64 rng(1234);
    for (auto [p, n] : {std::pair<std::uint64_t, unsigned>{3, 2}, {5, 2}, {3, 3}, {7, 1}}) {
        Modulus mod(p, n);
        for (int trial = 0; trial < 40; ++trial) {
            const std::size_t r = 1 + rng() % 3, c = 1 + rng() % 3;
            auto a = random_matrix(rng, r, c, mod);
            auto h = canonical_form(a);
            CHECK(canonical_form(h) == h);
            CHECK(row_span(h) == row_span(a));
            // membership agrees with the enumerated span on random probes
            auto s = row_span(a);
            std::uniform_int_distribution<std::uint64_t> dist(0, mod.value() - 1);
            for (int probe = 0; probe < 20; ++probe) {
                ModVector v(c);
                for (auto& x : v) x = dist(rng);
                if (probe % 2 == 0) v = *std::next(s.begin(), static_cast<long>(rng() % s.size()));
                CHECK(row_module_contains(a, v) == (s.count(v) == 1));
            }
        }
    }
}

TEST_CASE("kernel examples") {
    Modulus m25(5, 2);
    CHECK(kernel(ModularMatrix::identity(2, m25)).empty());

    auto k1 = kernel(ModularMatrix(m25, {{5}}));
    CHECK(structure(k1, m25) == AbelianPGroupType({1}));
    CHECK(oracle::span(m25, 1, k1) == oracle::kernel_by_enumeration(ModularMatrix(m25, {{5}})));

    ModularMatrix a(m25, {{5, 0}, {0, 1}});
    auto k2 = kernel(a);
    REQUIRE(k2.size() == 1);
    CHECK(k2[0] == ModVector{5, 0});
    CHECK(oracle::span(m25, 2, k2) == oracle::kernel_by_enumeration(a));
}

TEST_CASE("kernel equals the enumerated kernel exactly") {
    std::mt19937_64 rng(99);
    for (auto [p, n] : {std::pair<std::uint64_t, unsigned>{3, 2}, {5, 2}, {3, 3}, {5, 1}, {7, 2}}) {
        Modulus mod(p, n);
        for (int trial = 0; trial < 25; ++trial) {
            std::size_t c = 1 + rng() % 3;
            std::uint64_t domain = 1;
            for (std::size_t k = 0; k < c; ++k) domain *= mod.value();
            if (domain > 1'000'000) c = 2;
            const std::size_t r = 1 + rng() % 3;
            auto a = random_matrix(rng, r, c, mod);
            auto gens = kernel(a);
            for (const auto& v : gens) {
                auto w = a.apply(v);
                CHECK(std::all_of(w.begin(), w.end(), [](Residue x) { return x == 0; }));
            }
            const auto enumerated = oracle::kernel_by_enumeration(a);
            CHECK(oracle::span(mod, c, gens) == enumerated);
            CHECK(structure(gens, mod) == oracle::type_of_set(mod, enumerated));
        }
    }
}

TEST_CASE("structure examples") {
    Modulus m25(5, 2);
    std::vector<ModVector> full{{1, 0}, {0, 1}};
    CHECK(structure(full, m25) == AbelianPGroupType({2, 2}));
    std::vector<ModVector> one{{5, 0}};
    CHECK(structure(one, m25) == AbelianPGroupType({1}));
    CHECK(oracle::span(m25, 2, one).size() == 5);
    CHECK(structure({}, m25).is_trivial());
    CHECK(AbelianPGroupType({1, 2, 1}).to_string(5) == "Z/25 + (Z/5)^2");
    CHECK(AbelianPGroupType().to_string(5) == "0");
}

TEST_CASE("structure ignores order, duplicates and unimodular recombination") {
    std::mt19937_64 rng(7);
    Modulus mod(3, 3);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t len = 1 + rng() % 3;
        std::vector<ModVector> gens(1 + rng() % 3, ModVector(len));
        for (auto& g : gens)
            for (auto& x : g) x = mod.mul(rng() % mod.value(), mod.p_power(static_cast<unsigned>(rng() % 3)));
        const auto base = structure(gens, mod);
        CHECK(base == oracle::type_of_set(mod, oracle::span(mod, len, gens)));

        auto shuffled = gens;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        shuffled.push_back(gens.front());
        CHECK(structure(shuffled, mod) == base);

        if (gens.size() >= 2) {
            auto mixed = gens;
            const Residue f = rng() % mod.value();
            for (std::size_t k = 0; k < len; ++k) mixed[0][k] = mod.add(mixed[0][k], mod.mul(f, mixed[1][k]));
            CHECK(structure(mixed, mod) == base);
        }
    }
}

TEST_CASE("unramified quadratic ring unit counts") {
    for (std::uint64_t p : {3, 5, 7}) {
        UnramifiedQuadraticRing w(Modulus::prime_field(p));
        CHECK(w.units().size() == p * p - 1);
        CHECK(w.unit_group_order() == p * p - 1);
        // t^2 - r has no root mod p
        for (Residue a = 0; a < p; ++a) CHECK((a * a) % p != w.nonresidue());
    }
    UnramifiedQuadraticRing w9(Modulus(3, 2));
    CHECK(w9.units().size() == w9.unit_group_order());
    CHECK(w9.unit_group_order() == 9 * 8);
}

TEST_CASE("unit group generators generate every unit") {
    for (auto [p, n] : {std::pair<std::uint64_t, unsigned>{3, 1}, {3, 2}, {5, 2}}) {
        UnramifiedQuadraticRing w(Modulus(p, n));
        std::set<std::pair<Residue, Residue>> seen{{w.one().x, w.one().y}};
        std::vector<UnramifiedQuadraticRing::Element> frontier{w.one()};
        while (!frontier.empty()) {
            std::vector<UnramifiedQuadraticRing::Element> next;
            for (auto e : frontier)
                for (auto g : w.unit_group_generators()) {
                    auto f = w.mul(e, g);
                    if (seen.insert({f.x, f.y}).second) next.push_back(f);
                }
            frontier = std::move(next);
        }
        CHECK(seen.size() == w.unit_group_order());
    }
}

TEST_CASE("prime field echelon nullspace") {
    PrimeFieldEchelon e(5, 3);
    CHECK(e.add_row(std::vector<std::uint64_t>{1, 2, 3}));
    CHECK_FALSE(e.add_row(std::vector<std::uint64_t>{2, 4, 6}));
    CHECK(e.add_row(std::vector<std::uint64_t>{0, 1, 1}));
    auto ns = e.nullspace();
    REQUIRE(ns.size() == 1);
    for (const auto& row : std::vector<std::vector<std::uint64_t>>{{1, 2, 3}, {0, 1, 1}}) {
        std::uint64_t dot = 0;
        for (int k = 0; k < 3; ++k) dot += row[k] * ns[0][k];
        CHECK(dot % 5 == 0);
    }
}
