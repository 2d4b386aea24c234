#include "galrep/grpmod/gmodule.hpp"

#include "galrep/zring/prime_field.hpp"

#include <algorithm>
#include <random>

namespace galrep::grpmod {

std::vector<std::vector<std::uint64_t>> spin(std::span<const ModularMatrix> actions, std::span<const std::uint64_t> v,
                                             std::uint64_t p) {
    zring::PrimeFieldEchelon span(p, v.size());
    std::vector<std::vector<std::uint64_t>> queue;
    if (span.add_row(v)) queue.emplace_back(v.begin(), v.end());
    for (std::size_t head = 0; head < queue.size(); ++head)
        for (const auto& a : actions) {
            auto w = a.apply(queue[head]);
            if (span.add_row(w)) queue.push_back(std::move(w));
        }
    return span.basis_rows();
}

bool is_irreducible(const GModule& module, std::size_t cap) {
    const auto& mod = module.modulus();
    if (mod.level() != 1) throw Error(ErrorKind::InvalidParams, "irreducibility is only tested over F_p");
    (void)module.element_actions(cap);
    const std::size_t d = module.rank();
    const std::uint64_t p = mod.p();
    const auto& actions = module.generator_action();
    auto proper = [&](std::span<const std::uint64_t> v) { return spin(actions, v, p).size() < d; };

    // number of lines (p^d - 1)/(p - 1), saturating
    std::uint64_t lines = 0, pk = 1;
    bool small = true;
    for (std::size_t k = 0; k < d && small; ++k) {
        lines += pk;
        if (lines > 1'000'000) small = false;
        pk *= p;
    }
    if (small) {
        // each line once: first nonzero coordinate normalized to 1
        for (std::size_t lead = 0; lead < d; ++lead) {
            std::vector<std::uint64_t> v(d, 0);
            v[lead] = 1;
            while (true) {
                if (proper(v)) return false;
                std::size_t k = lead + 1;
                while (k < d && ++v[k] == p) v[k++] = 0;
                if (k == d) break;
            }
        }
        return true;
    }
    for (std::size_t i = 0; i < d; ++i) {
        std::vector<std::uint64_t> e(d, 0);
        e[i] = 1;
        if (proper(e)) return false;
    }
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<std::uint64_t> dist(0, p - 1);
    for (int trial = 0; trial < 32; ++trial) {
        std::vector<std::uint64_t> v(d);
        for (auto& x : v) x = dist(rng);
        if (std::all_of(v.begin(), v.end(), [](auto x) { return x == 0; })) continue;
        if (proper(v)) return false;
    }
    return true;
}

}  // namespace galrep::grpmod
