#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace galrep::zring {

using Residue = std::uint64_t;
using ModVector = std::vector<Residue>;

/// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime(std::uint64_t n) noexcept;

/// Distinct prime divisors, by trial division.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

/// The ring Z/p^n for an odd prime p. Products are formed in 128-bit
/// arithmetic, so p^n is capped below 2^62.
class Modulus {
public:
    Modulus(std::uint64_t p, unsigned level);

    static Modulus prime_field(std::uint64_t p) { return Modulus(p, 1); }

    std::uint64_t p() const noexcept { return p_; }
    unsigned level() const noexcept { return n_; }
    std::uint64_t value() const noexcept { return q_; }

    Modulus at_level(unsigned level) const { return Modulus(p_, level); }

    Residue reduce(std::int64_t x) const noexcept;
    Residue reduce_unsigned(std::uint64_t x) const noexcept { return x % q_; }

    Residue add(Residue a, Residue b) const noexcept {
        Residue s = a + b;
        return s >= q_ ? s - q_ : s;
    }
    Residue sub(Residue a, Residue b) const noexcept { return a >= b ? a - b : a + q_ - b; }
    Residue neg(Residue a) const noexcept { return a == 0 ? 0 : q_ - a; }
    Residue mul(Residue a, Residue b) const noexcept {
        if ((a | b) <= 0xffffffffULL) return (a * b) % q_;
        return static_cast<Residue>((static_cast<unsigned __int128>(a) * b) % q_);
    }
    Residue pow(Residue base, std::uint64_t exp) const noexcept;

    bool is_unit(Residue a) const noexcept { return a % p_ != 0; }
    /// Throws InvalidParams when `a` is not a unit.
    Residue inverse(Residue a) const;

    /// p-adic valuation of a residue; the zero residue has valuation `level()`.
    unsigned valuation(Residue a) const noexcept;

    /// p^k reduced modulo p^n (zero once k >= n).
    Residue p_power(unsigned k) const noexcept;

    /// Multiplicative order of a unit.
    std::uint64_t unit_order(Residue a) const;

    /// Generator of the cyclic group (Z/p^n)^x.
    Residue primitive_root() const;

    /// Signed representative in (-q/2, q/2].
    std::int64_t centered(Residue a) const noexcept;

    std::string to_string() const;

    friend bool operator==(const Modulus& a, const Modulus& b) noexcept {
        return a.p_ == b.p_ && a.n_ == b.n_;
    }

private:
    std::uint64_t p_;
    unsigned n_;
    std::uint64_t q_;
};

}  // namespace galrep::zring
