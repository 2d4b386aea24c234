#pragma once

#include "galrep/ecq/curve.hpp"

namespace galrep::ecq {

enum class ReductionTag {
    Good,
    MultiplicativeSplit,
    MultiplicativeNonSplit,
    AdditivePotentiallyMultiplicative,
    AdditivePotentiallyGood,
};

const char* to_string(ReductionTag t) noexcept;

struct ReductionData {
    ReductionTag tag = ReductionTag::Good;
    std::uint64_t l = 0;
    unsigned scalings = 0;  // number of u = l steps to reach a minimal model
    BigInt c4_min, c6_min, disc_min;
    int v_c4_min = 0;
    int v_disc_min = 0;
    int v_j = 0;  // infinite_valuation when j = 0
};

/// Minimal-model reduction type at a prime l >= 5.
/// Throws SmallPrimeUnsupported for l in {2, 3}, InvalidParams if l is not prime.
ReductionData reduction_at(const Curve& c, std::uint64_t l);

/// Model with c4 -> u^4 c4, c6 -> u^6 c6 (a_i -> u^i a_i).
Curve scaled(const Curve& c, const BigInt& u);

}  // namespace galrep::ecq
