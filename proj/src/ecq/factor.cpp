#include "galrep/ecq/factor.hpp"

#include <boost/multiprecision/miller_rabin.hpp>

#include <algorithm>
#include <map>
#include <random>

namespace galrep::ecq {

bool is_probable_prime(const BigInt& n) {
    if (n < 2) return false;
    static std::mt19937_64 rng(12345);
    return boost::multiprecision::miller_rabin_test(n, 32, rng);
}

namespace {

constexpr std::uint64_t trial_limit = 100000;
constexpr std::uint64_t rho_steps = 2'000'000;

// Brent's variant; returns a nontrivial factor or 0.
BigInt rho(const BigInt& n, std::uint64_t seed) {
    BigInt y = seed % n, c = (seed * 7 + 1) % n, g = 1, q = 1, x, ys;
    const std::uint64_t m = 128;
    std::uint64_t r = 1, steps = 0;
    auto f = [&](const BigInt& v) { return (v * v + c) % n; };
    while (g == 1) {
        x = y;
        for (std::uint64_t i = 0; i < r; ++i) y = f(y);
        std::uint64_t k = 0;
        while (k < r && g == 1) {
            ys = y;
            for (std::uint64_t i = 0; i < std::min(m, r - k); ++i) {
                y = f(y);
                q = (q * abs(x - y)) % n;
            }
            g = gcd(q, n);
            k += m;
            steps += m;
        }
        r *= 2;
        if (steps > rho_steps) return 0;
    }
    if (g == n) {
        do {
            ys = f(ys);
            g = gcd(abs(x - ys), n);
        } while (g == 1);
    }
    return g == n ? BigInt(0) : g;
}

}  // namespace

Factorization factor(BigInt n) {
    Factorization out;
    n = abs(n);
    std::map<BigInt, unsigned> found;
    if (n <= 1) return out;
    for (std::uint64_t d = 2; d <= trial_limit && d * d <= n; d += (d == 2 ? 1 : 2))
        while (n % d == 0) {
            ++found[d];
            n /= d;
        }
    std::vector<BigInt> pending;
    if (n > 1) pending.push_back(n);
    while (!pending.empty()) {
        BigInt m = pending.back();
        pending.pop_back();
        if (m < BigInt(trial_limit) * trial_limit || is_probable_prime(m)) {
            ++found[m];
            continue;
        }
        BigInt d = 0;
        for (std::uint64_t seed = 2; seed < 8 && d == 0; ++seed) d = rho(m, seed);
        if (d == 0) {
            out.cofactor *= m;
            continue;
        }
        pending.push_back(d);
        pending.push_back(m / d);
    }
    for (auto& [p, e] : found) out.primes.emplace_back(p, e);
    return out;
}

}  // namespace galrep::ecq
