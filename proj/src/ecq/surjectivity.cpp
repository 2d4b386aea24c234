#include "galrep/ecq/surjectivity.hpp"

#include "galrep/ecq/point_count.hpp"
#include "galrep/error.hpp"
#include "galrep/zring/modulus.hpp"

#include <sstream>

namespace galrep::ecq {

const char* to_string(SubgroupFamily f) noexcept {
    switch (f) {
        case SubgroupFamily::Borel: return "Borel";
        case SubgroupFamily::SplitCartanNormalizer: return "SplitCartanNormalizer";
        case SubgroupFamily::NonSplitCartanNormalizer: return "NonSplitCartanNormalizer";
        case SubgroupFamily::Exceptional: return "Exceptional";
    }
    return "?";
}

const char* to_string(SurjectivityTag t) noexcept {
    switch (t) {
        case SurjectivityTag::Surjective: return "Surjective";
        case SurjectivityTag::NonSurjectiveSuspected: return "NonSurjectiveSuspected";
        case SurjectivityTag::Undetermined: return "Undetermined";
    }
    return "?";
}

namespace {

enum class Residuosity { Zero, Square, NonSquare };

Residuosity classify(const zring::Modulus& m, std::uint64_t v) {
    if (v == 0) return Residuosity::Zero;
    return m.pow(v, (m.p() - 1) / 2) == 1 ? Residuosity::Square : Residuosity::NonSquare;
}

// Whether a Frobenius with trace a and determinant q can lie in the family.
bool compatible(SubgroupFamily f, const zring::Modulus& m, std::uint64_t a, std::uint64_t q) {
    const auto disc = m.sub(m.mul(a, a), m.mul(4, q));
    const auto r = classify(m, disc);
    switch (f) {
        case SubgroupFamily::Borel:
            return r != Residuosity::NonSquare;
        case SubgroupFamily::SplitCartanNormalizer:
            return a == 0 || r != Residuosity::NonSquare;
        case SubgroupFamily::NonSplitCartanNormalizer:
            return a == 0 || r != Residuosity::Square;
        case SubgroupFamily::Exceptional: {
            // projective order r in {1,2,3,4,5}: a^2/q in {4,0,1,2} or a root of u^2 - 3u + 1
            const auto u = m.mul(m.mul(a, a), m.inverse(q));
            if (u == 0 || u == 1 || u == 2 || u == 4) return true;
            return m.add(m.sub(m.mul(u, u), m.mul(3, u)), 1) == 0;
        }
    }
    return true;
}

}  // namespace

SurjectivityVerdict surjectivity_test(const Curve& c, std::uint64_t p, std::uint64_t aux_bound) {
    if (p < 5 || !zring::is_prime(p)) throw Error(ErrorKind::InvalidParams, "surjectivity test needs a prime p >= 5");
    if (aux_bound < 50) throw Error(ErrorKind::InvalidParams, "aux_bound must be at least 50");
    if (aux_bound > max_count_prime)
        throw Error(ErrorKind::BudgetExceeded, "aux_bound exceeds " + std::to_string(max_count_prime));

    std::uint64_t work = 0;
    for (std::uint64_t q = 2; q <= aux_bound; ++q)
        if (zring::is_prime(q)) work += q;
    if (work > enumeration_budget())
        throw Error(ErrorKind::BudgetExceeded, "point counts up to " + std::to_string(aux_bound) + " need " +
                                                   std::to_string(work) + " steps, over budget " +
                                                   std::to_string(enumeration_budget()));

    const zring::Modulus m(p, 1);
    (void)invariants(c);
    SurjectivityVerdict out;
    out.aux_bound = aux_bound;
    for (auto f : {SubgroupFamily::Borel, SubgroupFamily::SplitCartanNormalizer, SubgroupFamily::NonSplitCartanNormalizer,
                   SubgroupFamily::Exceptional})
        out.families.push_back({f, std::nullopt});

    for (std::uint64_t q = 2; q <= aux_bound; ++q) {
        if (q == p || !zring::is_prime(q)) continue;
        std::int64_t a;
        try {
            a = a_p(c, q);
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::BadReduction) continue;
            throw;
        }
        ++out.signatures;
        const auto ar = m.reduce(a), qr = m.reduce_unsigned(q);
        for (auto& fam : out.families)
            if (!fam.witness && !compatible(fam.family, m, ar, qr)) fam.witness = FrobeniusSignature{q, a};
    }

    std::ostringstream ev;
    ev << out.signatures << " good primes q <= " << aux_bound << ";";
    for (const auto& fam : out.families) {
        ev << ' ' << to_string(fam.family) << ':';
        if (fam.witness)
            ev << " excluded by q=" << fam.witness->q << " (a_q=" << fam.witness->a_q << ")";
        else
            ev << " consistent with every signature";
        ev << ';';
        if (!fam.witness && !out.suspected) out.suspected = fam.family;
    }
    if (!out.suspected) {
        out.tag = SurjectivityTag::Surjective;
        ev << " image contains SL_2(F_p) and the determinant is surjective";
    } else if (out.signatures >= min_signatures_for_suspicion) {
        out.tag = SurjectivityTag::NonSurjectiveSuspected;
        ev << " image possibly inside a " << to_string(*out.suspected)
           << " subgroup (suspicion only, not a proof; isogenies or CM would explain it)";
    } else {
        out.tag = SurjectivityTag::Undetermined;
        ev << " too few signatures to suspect a family";
    }
    out.evidence = ev.str();
    return out;
}

}  // namespace galrep::ecq
