#include "galrep/cohom/cohomology.hpp"

namespace galrep::cohom {

namespace {

bool normal_in(const MatrixGroup& g, const MatrixGroup& h, std::size_t cap) {
    for (const auto& x : h.generators())
        if (!g.contains(x, cap)) return false;
    for (const auto& s : g.generators()) {
        const auto inv = s.inverse();
        for (const auto& x : h.generators())
            if (!h.contains(s * x * inv, cap)) return false;
    }
    return true;
}

}  // namespace

std::optional<VanishingWitness> vanishing_criterion(const GModule& v, std::span<const MatrixGroup> candidates,
                                                    std::size_t cap) {
    const auto& group = v.group();
    const auto& mod = group.modulus();
    try {
        for (zring::Residue c = 2; c < mod.value(); ++c) {
            if (!mod.is_unit(c)) continue;
            const auto order = mod.unit_order(c);
            if (order % mod.p() == 0) continue;
            const auto scalar = ModularMatrix::scalar(group.dim(), static_cast<std::int64_t>(c), mod);
            if (!group.contains(scalar, cap)) continue;
            const std::vector<ModularMatrix> gens{scalar};
            if (!grpmod::invariants(v, gens).type.is_trivial()) continue;
            return VanishingWitness{gens, order,
                                    "central <cI> with c = " + std::to_string(c) + ", order " + std::to_string(order)};
        }
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::CapExceeded) throw;
    }
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        const auto& h = candidates[i];
        try {
            if (!normal_in(group, h, cap)) continue;
            const auto order = h.order(cap);
            if (order % mod.p() == 0) continue;
            if (!grpmod::invariants(v, h.generators()).type.is_trivial()) continue;
            return VanishingWitness{h.generators(), order,
                                    "supplied normal subgroup #" + std::to_string(i) + ", order " + std::to_string(order)};
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::CapExceeded) throw;
        }
    }
    return std::nullopt;
}

}  // namespace galrep::cohom
