#include "galrep/ecq/reduction.hpp"

#include "galrep/error.hpp"
#include "galrep/zring/modulus.hpp"

namespace galrep::ecq {

const char* to_string(ReductionTag t) noexcept {
    switch (t) {
        case ReductionTag::Good: return "Good";
        case ReductionTag::MultiplicativeSplit: return "MultiplicativeSplit";
        case ReductionTag::MultiplicativeNonSplit: return "MultiplicativeNonSplit";
        case ReductionTag::AdditivePotentiallyMultiplicative: return "AdditivePotentiallyMultiplicative";
        case ReductionTag::AdditivePotentiallyGood: return "AdditivePotentiallyGood";
    }
    return "?";
}

Curve scaled(const Curve& c, const BigInt& u) {
    static constexpr unsigned weight[5] = {1, 2, 3, 4, 6};
    Curve out = c;
    for (std::size_t i = 0; i < 5; ++i) out.a[i] *= pow(u, weight[i]);
    return out;
}

ReductionData reduction_at(const Curve& c, std::uint64_t l) {
    if (l == 2 || l == 3)
        throw Error(ErrorKind::SmallPrimeUnsupported, "reduction type at l = " + std::to_string(l) + " is not supported");
    if (!zring::is_prime(l)) throw Error(ErrorKind::InvalidParams, std::to_string(l) + " is not prime");

    const auto inv = invariants(c);
    ReductionData r;
    r.l = l;
    r.c4_min = inv.c4;
    r.c6_min = inv.c6;
    r.disc_min = inv.disc;
    const BigInt l4 = pow(BigInt(l), 4), l6 = pow(BigInt(l), 6), l12 = pow(BigInt(l), 12);
    while (r.c4_min % l4 == 0 && r.c6_min % l6 == 0 && r.disc_min % l12 == 0) {
        r.c4_min /= l4;
        r.c6_min /= l6;
        r.disc_min /= l12;
        ++r.scalings;
    }
    r.v_c4_min = valuation(r.c4_min, l);
    r.v_disc_min = valuation(r.disc_min, l);
    r.v_j = valuation(inv.j, l);

    if (r.v_disc_min == 0) {
        r.tag = ReductionTag::Good;
    } else if (r.v_j < 0) {
        if (r.v_c4_min == 0) {
            const zring::Modulus mod(l, 1);
            const auto minus_c6 = mod_u64(-r.c6_min, l);
            r.tag = mod.pow(minus_c6, (l - 1) / 2) == 1 ? ReductionTag::MultiplicativeSplit
                                                        : ReductionTag::MultiplicativeNonSplit;
        } else {
            r.tag = ReductionTag::AdditivePotentiallyMultiplicative;
        }
    } else {
        r.tag = ReductionTag::AdditivePotentiallyGood;
    }
    return r;
}

}  // namespace galrep::ecq
