#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <array>
#include <cstdint>
#include <limits>
#include <string>

namespace galrep::ecq {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 with integer coefficients.
struct Curve {
    std::array<BigInt, 5> a;  // a1, a2, a3, a4, a6

    /// "a1,a2,a3,a4,a6" in decimal; throws InvalidParams on malformed input.
    static Curve parse(const std::string& text);
    std::string to_string() const;
};

struct StandardInvariants {
    BigInt b2, b4, b6, b8;
    BigInt c4, c6;
    BigInt disc;
    Rational j;
};

/// Throws SingularCurve when the discriminant vanishes.
StandardInvariants invariants(const Curve& c);

inline constexpr int infinite_valuation = std::numeric_limits<int>::max();

/// l-adic valuation; infinite_valuation for zero.
int valuation(const BigInt& x, std::uint64_t l);
int valuation(const Rational& x, std::uint64_t l);

/// Residue of x in [0, m).
std::uint64_t mod_u64(const BigInt& x, std::uint64_t m);

/// The thirteen rational j-invariants of curves with complex multiplication
/// (imaginary quadratic orders of class number one).
bool is_cm_j_invariant(const Rational& j);

}  // namespace galrep::ecq
