#pragma once

#include "galrep/error.hpp"
#include "galrep/zring/matrix.hpp"

#include <cstddef>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

namespace galrep::grpmod {

using zring::ModularMatrix;
using zring::Modulus;

/// Breadth-first closure of a generating set. Every element except the
/// identity (index 0) is recorded as parent * generator, which gives each
/// element a word in the generators for free.
struct Closure {
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    std::vector<ModularMatrix> elements;
    std::vector<std::size_t> parent;
    std::vector<std::size_t> via;
    /// right[i][s] = index of elements[i] * generators[s]
    std::vector<std::vector<std::size_t>> right;
    std::unordered_map<zring::ModVector, std::size_t, zring::ResidueVectorHash> index;

    std::size_t order() const noexcept { return elements.size(); }
    std::optional<std::size_t> find(const ModularMatrix& g) const;
    std::size_t at(const ModularMatrix& g) const;
};

struct GroupTable {
    std::vector<std::vector<std::size_t>> mult;  // mult[a][b] = index of a*b
    std::vector<std::size_t> inverse;
};

/// Finite subgroup of GL_d(Z/p^n) given by generators. The closure is only
/// computed on request and cached; concurrent first calls are serialized.
class MatrixGroup {
public:
    MatrixGroup(Modulus mod, std::size_t dim, std::vector<ModularMatrix> generators);

    /// GL_2(Z/p^n) from diag(g,1), [[1,1],[0,1]] and [[1,0],[1,1]] with g a
    /// primitive root mod p^n.
    static MatrixGroup general_linear(const Modulus& mod);
    /// SL_2(Z/p^n) from the two elementary unipotents.
    static MatrixGroup special_linear(const Modulus& mod);
    /// Upper triangular matrices in GL_2(Z/p^n).
    static MatrixGroup borel(const Modulus& mod);
    static MatrixGroup cyclic(const ModularMatrix& g);

    const Modulus& modulus() const noexcept { return mod_; }
    std::size_t dim() const noexcept { return dim_; }
    const std::vector<ModularMatrix>& generators() const noexcept { return gens_; }

    /// Throws CapExceeded as soon as more than `cap` elements are found.
    std::shared_ptr<const Closure> closure(std::size_t cap = default_closure_cap) const;
    std::size_t order(std::size_t cap = default_closure_cap) const { return closure(cap)->order(); }
    bool contains(const ModularMatrix& g, std::size_t cap = default_closure_cap) const;
    GroupTable table(std::size_t cap = default_closure_cap) const;

private:
    Modulus mod_;
    std::size_t dim_;
    std::vector<ModularMatrix> gens_;
    struct Cache;
    std::shared_ptr<Cache> cache_;
};

/// (p^2 - 1)(p^2 - p) p^{4(n-1)}, the order of GL_2(Z/p^n).
std::uint64_t gl2_order(const Modulus& mod);

}  // namespace galrep::grpmod
