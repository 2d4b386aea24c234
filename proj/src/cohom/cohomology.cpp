#include "galrep/cohom/cohomology.hpp"

#include "galrep/zring/prime_field.hpp"
#include "solver.hpp"

namespace galrep::cohom {

namespace detail {

using zring::PrimeFieldEchelon;

std::size_t h0_dim(const ActionTable& t) {
    PrimeFieldEchelon e(t.p, t.d);
    for (std::size_t s = 0; s < t.gens(); ++s) {
        const auto& a = t.act[t.right[0][s]];
        for (std::size_t r = 0; r < t.d; ++r) {
            Vec row(a.row(r).begin(), a.row(r).end());
            row[r] = (row[r] + t.p - 1) % t.p;
            e.add_row(row);
        }
    }
    return t.d - e.rank();
}

CocycleSpace solve_parametrized(const ActionTable& t, bool want_basis) {
    const std::size_t d = t.d, k = t.gens(), cols = k * d, n = t.order();
    const std::uint64_t p = t.p;
    CocycleSpace out;
    out.h0 = h0_dim(t);
    out.b1 = d - out.h0;

    // L_{x s} = L_x + act(x) E_s along a breadth-first tree from the identity
    out.values.assign(n, Vec());
    out.values[0].assign(d * cols, 0);
    std::vector<std::size_t> order{0};
    std::vector<std::vector<bool>> tree(n, std::vector<bool>(k, false));
    for (std::size_t head = 0; head < order.size(); ++head) {
        const std::size_t x = order[head];
        for (std::size_t s = 0; s < k; ++s) {
            const std::size_t y = t.right[x][s];
            if (!out.values[y].empty()) continue;
            Vec l = out.values[x];
            for (std::size_t r = 0; r < d; ++r)
                for (std::size_t c = 0; c < d; ++c) {
                    auto& cell = l[r * cols + s * d + c];
                    cell = (cell + t.act[x](r, c)) % p;
                }
            out.values[y] = std::move(l);
            tree[x][s] = true;
            order.push_back(y);
        }
    }
    if (order.size() != n) throw Error(ErrorKind::InvalidParams, "generators do not reach every group element");

    PrimeFieldEchelon e(p, cols);
    const std::size_t target = cols - out.b1;  // z1 >= b1 always
    for (std::size_t x = 0; x < n && (want_basis || e.rank() < target); ++x)
        for (std::size_t s = 0; s < k; ++s) {
            if (tree[x][s]) continue;
            const std::size_t y = t.right[x][s];
            for (std::size_t r = 0; r < d; ++r) {
                Vec row(cols);
                for (std::size_t c = 0; c < cols; ++c)
                    row[c] = (out.values[y][r * cols + c] + p - out.values[x][r * cols + c]) % p;
                for (std::size_t c = 0; c < d; ++c) {
                    auto& cell = row[s * d + c];
                    cell = (cell + p - t.act[x](r, c)) % p;
                }
                e.add_row(row);
            }
        }
    out.z1 = cols - e.rank();
    if (want_basis) {
        out.z_basis = e.nullspace();
        PrimeFieldEchelon b(p, cols);
        for (std::size_t i = 0; i < d; ++i) {
            Vec f(cols, 0);
            for (std::size_t s = 0; s < k; ++s) {
                const auto& a = t.act[t.right[0][s]];
                for (std::size_t r = 0; r < d; ++r) f[s * d + r] = (a(r, i) + p - (r == i ? 1 : 0)) % p;
            }
            b.add_row(f);
        }
        out.b_basis = b.basis_rows();
    }
    return out;
}

Vec evaluate(const CocycleSpace& c, std::size_t x, const Vec& z, std::size_t d, std::uint64_t p) {
    const std::size_t cols = z.size();
    Vec out(d, 0);
    for (std::size_t r = 0; r < d; ++r) {
        unsigned __int128 acc = 0;
        for (std::size_t j = 0; j < cols; ++j) acc += static_cast<unsigned __int128>(c.values[x][r * cols + j]) * z[j];
        out[r] = static_cast<std::uint64_t>(acc % p);
    }
    return out;
}

std::size_t dense_z1(const ActionTable& t, const std::vector<std::vector<std::size_t>>& mult, std::size_t b1) {
    const std::size_t n = t.order(), d = t.d, cols = n * d;
    const std::uint64_t p = t.p;
    PrimeFieldEchelon e(p, cols);
    const std::size_t target = cols - b1;
    // f(ab) - f(a) - a f(b) = 0
    for (std::size_t a = 0; a < n && e.rank() < target; ++a)
        for (std::size_t b = 0; b < n && e.rank() < target; ++b) {
            const std::size_t ab = mult[a][b];
            for (std::size_t r = 0; r < d; ++r) {
                Vec row(cols, 0);
                row[ab * d + r] = (row[ab * d + r] + 1) % p;
                row[a * d + r] = (row[a * d + r] + p - 1) % p;
                for (std::size_t c = 0; c < d; ++c) row[b * d + c] = (row[b * d + c] + p - t.act[a](r, c)) % p;
                e.add_row(row);
            }
        }
    return cols - e.rank();
}

std::size_t dense_z2(const ActionTable& t, const std::vector<std::vector<std::size_t>>& mult, std::size_t b2) {
    const std::size_t n = t.order(), d = t.d, m = n - 1, cols = m * m * d;
    const std::uint64_t p = t.p;
    if (cols == 0) return 0;
    PrimeFieldEchelon e(p, cols);
    const std::size_t target = cols - b2;
    auto col = [&](std::size_t g, std::size_t h) { return ((g - 1) * m + (h - 1)) * d; };
    // g f(h,k) - f(gh,k) + f(g,hk) - f(g,h) = 0, with f = 0 whenever an argument is the identity
    for (std::size_t g = 1; g < n && e.rank() < target; ++g)
        for (std::size_t h = 1; h < n && e.rank() < target; ++h)
            for (std::size_t k = 1; k < n && e.rank() < target; ++k) {
                const std::size_t gh = mult[g][h], hk = mult[h][k];
                for (std::size_t r = 0; r < d; ++r) {
                    Vec row(cols, 0);
                    for (std::size_t c = 0; c < d; ++c) row[col(h, k) + c] = t.act[g](r, c);
                    if (gh != 0) row[col(gh, k) + r] = (row[col(gh, k) + r] + p - 1) % p;
                    if (hk != 0) row[col(g, hk) + r] = (row[col(g, hk) + r] + 1) % p;
                    row[col(g, h) + r] = (row[col(g, h) + r] + p - 1) % p;
                    e.add_row(row);
                }
            }
    return cols - e.rank();
}

}  // namespace detail

namespace {

detail::ActionTable table_of(const GModule& v, std::size_t cap) {
    const auto& mod = v.modulus();
    if (mod.level() != 1) throw Error(ErrorKind::InvalidParams, "cohomology is computed over F_p only (level 1)");
    auto c = v.group().closure(cap);
    detail::ActionTable t;
    t.p = mod.p();
    t.d = v.rank();
    t.right = c->right;
    t.act = v.element_actions(cap);
    return t;
}

}  // namespace

CohomologyReport h1_bruteforce(const GModule& v, H1Method method, std::size_t cap) {
    const auto t = table_of(v, cap);
    CohomologyReport r;
    r.group_order = t.order();
    r.module_dim = t.d;
    if (method == H1Method::Parametrized) {
        const auto c = detail::solve_parametrized(t, false);
        r.h0 = c.h0;
        r.b1 = c.b1;
        r.z1 = c.z1;
        r.method = "parametrized cocycle solve";
    } else {
        r.h0 = detail::h0_dim(t);
        r.b1 = t.d - r.h0;
        r.z1 = detail::dense_z1(t, v.group().table(cap).mult, r.b1);
        r.method = "dense cocycle solve";
    }
    r.h1 = r.z1 - r.b1;
    return r;
}

CohomologyReport h2_bruteforce(const GModule& v, std::size_t cap) {
    auto r = h1_bruteforce(v, H1Method::Parametrized, cap);
    const auto t = table_of(v, cap);
    const std::size_t b2 = (t.order() - 1) * t.d - r.z1;
    r.b2 = b2;
    r.z2 = detail::dense_z2(t, v.group().table(cap).mult, b2);
    r.h2 = *r.z2 - b2;
    r.method += " + normalized 2-cochain solve";
    return r;
}

}  // namespace galrep::cohom
