#pragma once

// Cocycle solvers shared by the cohomology entry points. Groups are passed
// as abstract tables so that quotients G/H can reuse the same code.

#include "galrep/zring/matrix.hpp"

#include <cstdint>
#include <vector>

namespace galrep::cohom::detail {

using Vec = std::vector<std::uint64_t>;

struct ActionTable {
    std::uint64_t p = 0;
    std::size_t d = 0;
    std::vector<std::vector<std::size_t>> right;  // right[x][s] = x * gen_s, identity is 0
    std::vector<zring::ModularMatrix> act;        // act[x] acting on F_p^d
    std::size_t order() const { return right.size(); }
    std::size_t gens() const { return right.empty() ? 0 : right.front().size(); }
};

struct CocycleSpace {
    std::size_t z1 = 0;
    std::size_t b1 = 0;
    std::size_t h0 = 0;
    std::vector<Vec> z_basis;  // in coordinates (f(gen_0), ..., f(gen_{k-1}))
    std::vector<Vec> b_basis;
    std::vector<Vec> values;   // values[x] is the d x kd matrix L_x, row major
};

/// Parametrized H^1. With `want_basis` false the elimination stops as soon as
/// the rank certifies z1 = b1.
CocycleSpace solve_parametrized(const ActionTable& t, bool want_basis);

/// f(x) = L_x * z for a parameter vector z.
Vec evaluate(const CocycleSpace& c, std::size_t x, const Vec& z, std::size_t d, std::uint64_t p);

std::size_t h0_dim(const ActionTable& t);

/// Dense solve over all pairs; needs the full multiplication table.
std::size_t dense_z1(const ActionTable& t, const std::vector<std::vector<std::size_t>>& mult, std::size_t b1);

/// z2 over normalized 2-cochains.
std::size_t dense_z2(const ActionTable& t, const std::vector<std::vector<std::size_t>>& mult, std::size_t b2);

}  // namespace galrep::cohom::detail
