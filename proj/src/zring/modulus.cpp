#include "galrep/zring/modulus.hpp"

#include "galrep/error.hpp"

#include <limits>

namespace galrep::zring {

namespace {

std::uint64_t mulmod64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod64(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    b %= m;
    while (e > 0) {
        if (e & 1) r = mulmod64(r, b, m);
        b = mulmod64(b, b, m);
        e >>= 1;
    }
    return r;
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    for (std::uint64_t small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % small == 0) return n == small;
    }
    std::uint64_t d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powmod64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned r = 1; r < s; ++r) {
            x = mulmod64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d <= n / d; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

Modulus::Modulus(std::uint64_t p, unsigned level) : p_(p), n_(level), q_(1) {
    if (p < 3 || !is_prime(p)) {
        throw Error(ErrorKind::InvalidModulus, "p = " + std::to_string(p) + " is not an odd prime");
    }
    if (level == 0) throw Error(ErrorKind::InvalidModulus, "level must be positive");
    constexpr std::uint64_t limit = std::uint64_t{1} << 62;
    for (unsigned i = 0; i < level; ++i) {
        if (q_ > limit / p) {
            throw Error(ErrorKind::InvalidModulus,
                        std::to_string(p) + "^" + std::to_string(level) + " does not fit below 2^62");
        }
        q_ *= p;
    }
    if (q_ >= limit) {
        throw Error(ErrorKind::InvalidModulus,
                    std::to_string(p) + "^" + std::to_string(level) + " does not fit below 2^62");
    }
}

Residue Modulus::reduce(std::int64_t x) const noexcept {
    const auto q = static_cast<std::int64_t>(q_);
    std::int64_t r = x % q;
    return static_cast<Residue>(r < 0 ? r + q : r);
}

Residue Modulus::pow(Residue base, std::uint64_t exp) const noexcept { return powmod64(base, exp, q_); }

Residue Modulus::inverse(Residue a) const {
    a %= q_;
    if (!is_unit(a)) {
        throw Error(ErrorKind::InvalidParams, std::to_string(a) + " is not a unit modulo " + std::to_string(q_));
    }
    // extended Euclid on signed 128-bit to stay clear of overflow
    __int128 t = 0, new_t = 1;
    __int128 r = q_, new_r = a;
    while (new_r != 0) {
        __int128 quot = r / new_r;
        __int128 tmp = t - quot * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - quot * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (t < 0) t += q_;
    return static_cast<Residue>(t);
}

unsigned Modulus::valuation(Residue a) const noexcept {
    a %= q_;
    if (a == 0) return n_;
    unsigned v = 0;
    while (a % p_ == 0) {
        a /= p_;
        ++v;
    }
    return v;
}

Residue Modulus::p_power(unsigned k) const noexcept {
    if (k >= n_) return 0;
    Residue r = 1;
    for (unsigned i = 0; i < k; ++i) r *= p_;
    return r;
}

std::uint64_t Modulus::unit_order(Residue a) const {
    if (!is_unit(a)) throw Error(ErrorKind::InvalidParams, "order of a non-unit");
    std::uint64_t group_order = (q_ / p_) * (p_ - 1);
    std::uint64_t order = group_order;
    for (std::uint64_t ell : prime_divisors(group_order)) {
        while (order % ell == 0 && pow(a, order / ell) == 1) order /= ell;
    }
    return order;
}

Residue Modulus::primitive_root() const {
    const std::uint64_t group_order = (q_ / p_) * (p_ - 1);
    for (Residue g = 2; g < q_; ++g) {
        if (!is_unit(g)) continue;
        if (unit_order(g) == group_order) return g;
    }
    return 1;  // unreachable for odd prime powers
}

std::int64_t Modulus::centered(Residue a) const noexcept {
    a %= q_;
    if (a > q_ / 2) return static_cast<std::int64_t>(a) - static_cast<std::int64_t>(q_);
    return static_cast<std::int64_t>(a);
}

std::string Modulus::to_string() const {
    if (n_ == 1) return std::to_string(p_);
    return std::to_string(p_) + "^" + std::to_string(n_);
}

}  // namespace galrep::zring
