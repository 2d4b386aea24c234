#include "galrep/cli/oracles.hpp"

#include "galrep/error.hpp"
#include "galrep/zring/quadratic_ring.hpp"

namespace galrep::cli::oracles {

using zring::ModularMatrix;
using zring::Modulus;
using zring::ModVector;

std::span<const char* const> curve_corpus() {
    static const char* const corpus[] = {
        "0,-1,1,-10,-20", "0,-1,1,-7820,-263580", "0,-1,1,0,0",  "1,0,1,4,-6",   "1,1,1,-10,-10",
        "1,-1,1,-1,-14",  "0,1,1,-9,-15",         "0,1,0,4,4",   "1,0,0,-4,-1",  "0,-1,0,-4,4",
        "1,0,1,-5,-8",    "0,0,1,0,-7",           "0,0,0,4,0",   "0,0,0,0,1",    "0,0,1,-1,0",
        "0,1,1,-23,-50",  "0,1,1,-2,0",           "0,0,1,-7,6",  "0,1,1,0,0",    "1,-1,1,0,0",
    };
    return corpus;
}

std::uint64_t naive_point_count(const ecq::Curve& c, std::uint64_t p) {
    if (p * p > enumeration_budget()) throw Error(ErrorKind::BudgetExceeded, "naive count over budget");
    std::int64_t a[5];
    for (int i = 0; i < 5; ++i) a[i] = static_cast<std::int64_t>(ecq::mod_u64(c.a[i], p));
    const auto P = static_cast<std::int64_t>(p);
    std::uint64_t n = 1;
    for (std::int64_t x = 0; x < P; ++x) {
        const auto rhs = ((x * x % P) * x + a[1] * (x * x % P) + a[3] * x + a[4]) % P;
        for (std::int64_t y = 0; y < P; ++y) n += (y * y + a[0] * x % P * y + a[2] * y) % P == rhs;
    }
    return n;
}

ecq::BigInt discriminant_from_cubic(const ecq::Curve& c) {
    const auto& [a1, a2, a3, a4, a6] = c.a;
    const ecq::BigInt b2 = a1 * a1 + 4 * a2, b4 = 2 * a4 + a1 * a3, b6 = a3 * a3 + 4 * a6;
    const ecq::BigInt A = 4, B = b2, C = 2 * b4, D = b6;
    return (B * B * C * C - 4 * A * C * C * C - 4 * B * B * B * D - 27 * A * A * D * D + 18 * A * B * C * D) / 16;
}

zring::AbelianPGroupType fixed_type_by_enumeration(std::span<const ModularMatrix> actions, std::size_t rank,
                                                   const Modulus& mod, std::uint64_t budget) {
    std::uint64_t size = 1;
    for (std::size_t k = 0; k < rank; ++k) {
        if (size > budget / mod.value()) throw Error(ErrorKind::BudgetExceeded, "fixed-vector enumeration over budget");
        size *= mod.value();
    }
    const unsigned n = mod.level();
    // killed[k] = number of fixed vectors annihilated by p^k
    std::vector<std::uint64_t> killed(n + 1, 0);
    ModVector v(rank, 0);
    while (true) {
        bool fixed = true;
        for (const auto& g : actions)
            if (g.apply(v) != v) {
                fixed = false;
                break;
            }
        if (fixed) {
            unsigned val = n;
            for (auto x : v) val = std::min(val, mod.valuation(x));
            // p^k v = 0 iff k >= n - val
            for (unsigned k = n - val; k <= n; ++k) ++killed[k];
        }
        std::size_t k = 0;
        while (k < rank && ++v[k] == mod.value()) v[k++] = 0;
        if (k == rank) break;
    }
    auto logp = [&](std::uint64_t x) {
        unsigned l = 0;
        while (x > 1) {
            x /= mod.p();
            ++l;
        }
        return l;
    };
    std::vector<unsigned> d(n + 2, 0);
    for (unsigned k = 1; k <= n; ++k) d[k] = logp(killed[k]) - logp(killed[k - 1]);
    std::vector<unsigned> exps;
    for (unsigned k = 1; k <= n; ++k)
        for (unsigned c = 0; c < d[k] - d[k + 1]; ++c) exps.push_back(k);
    return zring::AbelianPGroupType(exps);
}

std::uint64_t supersingular_fixed_count(std::uint64_t p, unsigned n, unsigned j, std::uint64_t budget) {
    const zring::UnramifiedQuadraticRing w(Modulus(p, n));
    const auto q = w.modulus().value();
    if (q * q > budget) throw Error(ErrorKind::BudgetExceeded, "unit enumeration over budget");
    std::vector<zring::UnramifiedQuadraticRing::Element> shifted;
    for (const auto& u : w.units()) shifted.push_back(w.sub(w.pow(u, j), w.one()));
    std::uint64_t fixed = 0;
    for (zring::Residue x = 0; x < q; ++x)
        for (zring::Residue y = 0; y < q; ++y) {
            const zring::UnramifiedQuadraticRing::Element a{x, y};
            bool ok = true;
            for (const auto& s : shifted)
                if (!(w.mul(a, s) == zring::UnramifiedQuadraticRing::Element{})) {
                    ok = false;
                    break;
                }
            fixed += ok;
        }
    return fixed;
}

}  // namespace galrep::cli::oracles
