#include "galrep/ecq/point_count.hpp"

#include "galrep/ecq/reduction.hpp"
#include "galrep/error.hpp"
#include "galrep/zring/modulus.hpp"

#include <vector>

namespace galrep::ecq {

namespace {

// Number of y in F_p with y^2 = v: 1 + legendre(v).
struct SquareCounter {
    zring::Modulus mod;
    CountMethod method;
    std::vector<std::uint8_t> table;

    SquareCounter(std::uint64_t p, CountMethod m) : mod(p, 1), method(m) {
        if (method == CountMethod::YLoop) {
            table.assign(p, 0);
            for (std::uint64_t y = 0; y < p; ++y) ++table[mod.mul(y, y)];
        }
    }

    unsigned operator()(std::uint64_t v) const {
        if (method == CountMethod::YLoop) return table[v];
        if (v == 0) return 1;
        return mod.pow(v, (mod.p() - 1) / 2) == 1 ? 2 : 0;
    }
};

// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 for odd p: complete the square,
// (2y + a1 x + a3)^2 = 4(x^3 + a2 x^2 + a4 x + a6) + (a1 x + a3)^2.
std::uint64_t count_general_odd(const std::array<std::uint64_t, 5>& a, std::uint64_t p, CountMethod method) {
    const SquareCounter sq(p, method);
    const auto& m = sq.mod;
    std::uint64_t total = 1;
    for (std::uint64_t x = 0; x < p; ++x) {
        const auto cubic = m.add(m.mul(m.add(m.mul(m.add(x, a[1]), x), a[3]), x), a[4]);
        const auto lin = m.add(m.mul(a[0], x), a[2]);
        total += sq(m.add(m.mul(4, cubic), m.mul(lin, lin)));
    }
    return total;
}

std::uint64_t count_char2(const std::array<std::uint64_t, 5>& a) {
    std::uint64_t total = 1;
    for (std::uint64_t x = 0; x < 2; ++x)
        for (std::uint64_t y = 0; y < 2; ++y) {
            const auto lhs = y * y + a[0] * x * y + a[2] * y;
            const auto rhs = x * x * x + a[1] * x * x + a[3] * x + a[4];
            total += (lhs % 2) == (rhs % 2);
        }
    return total;
}

}  // namespace

std::uint64_t count_points(const Curve& c, std::uint64_t p, CountMethod method) {
    if (p > max_count_prime)
        throw Error(ErrorKind::BudgetExceeded, "point counting is limited to p <= " + std::to_string(max_count_prime));
    if (!zring::is_prime(p)) throw Error(ErrorKind::InvalidParams, std::to_string(p) + " is not prime");

    if (p == 2 || p == 3) {
        const auto inv = invariants(c);
        if (inv.disc % p == 0)
            throw Error(ErrorKind::BadReduction,
                        "p = " + std::to_string(p) + " divides the discriminant of the given model");
        std::array<std::uint64_t, 5> a{};
        for (std::size_t i = 0; i < 5; ++i) a[i] = mod_u64(c.a[i], p);
        return p == 2 ? count_char2(a) : count_general_odd(a, p, method);
    }

    const auto red = reduction_at(c, p);
    if (red.tag != ReductionTag::Good)
        throw Error(ErrorKind::BadReduction,
                    std::string("reduction at p = ") + std::to_string(p) + " is " + to_string(red.tag));
    // y^2 = x^3 - 27 c4 x - 54 c6, isomorphic to the minimal model over F_p.
    std::array<std::uint64_t, 5> a{};
    a[3] = mod_u64(-27 * red.c4_min, p);
    a[4] = mod_u64(-54 * red.c6_min, p);
    return count_general_odd(a, p, method);
}

std::int64_t a_p(const Curve& c, std::uint64_t p, CountMethod method) {
    return static_cast<std::int64_t>(p + 1) - static_cast<std::int64_t>(count_points(c, p, method));
}

}  // namespace galrep::ecq
