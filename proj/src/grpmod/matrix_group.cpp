#include "galrep/grpmod/matrix_group.hpp"

#include <mutex>

namespace galrep::grpmod {

std::optional<std::size_t> Closure::find(const ModularMatrix& g) const {
    auto it = index.find(g.entries());
    if (it == index.end()) return std::nullopt;
    return it->second;
}

std::size_t Closure::at(const ModularMatrix& g) const {
    auto i = find(g);
    if (!i) throw Error(ErrorKind::InvalidParams, "matrix is not an element of the group");
    return *i;
}

struct MatrixGroup::Cache {
    std::mutex mu;
    std::shared_ptr<const Closure> closure;
};

MatrixGroup::MatrixGroup(Modulus mod, std::size_t dim, std::vector<ModularMatrix> generators)
    : mod_(mod), dim_(dim), gens_(std::move(generators)), cache_(std::make_shared<Cache>()) {
    if (dim == 0) throw Error(ErrorKind::InvalidParams, "matrix group dimension must be positive");
    for (const auto& g : gens_) {
        if (g.rows() != dim || g.cols() != dim) throw Error(ErrorKind::DimensionMismatch, "generator has wrong shape");
        if (!(g.modulus() == mod)) throw Error(ErrorKind::InvalidModulus, "generator modulus differs from group modulus");
        if (!g.is_invertible()) throw Error(ErrorKind::InvalidParams, "generator is not invertible: " + g.to_string());
    }
}

MatrixGroup MatrixGroup::general_linear(const Modulus& mod) {
    const auto g = static_cast<std::int64_t>(mod.primitive_root());
    return MatrixGroup(mod, 2,
                       {ModularMatrix(mod, {{g, 0}, {0, 1}}), ModularMatrix(mod, {{1, 1}, {0, 1}}),
                        ModularMatrix(mod, {{1, 0}, {1, 1}})});
}

MatrixGroup MatrixGroup::special_linear(const Modulus& mod) {
    return MatrixGroup(mod, 2, {ModularMatrix(mod, {{1, 1}, {0, 1}}), ModularMatrix(mod, {{1, 0}, {1, 1}})});
}

MatrixGroup MatrixGroup::borel(const Modulus& mod) {
    const auto g = static_cast<std::int64_t>(mod.primitive_root());
    return MatrixGroup(mod, 2,
                       {ModularMatrix(mod, {{g, 0}, {0, 1}}), ModularMatrix(mod, {{1, 0}, {0, g}}),
                        ModularMatrix(mod, {{1, 1}, {0, 1}})});
}

MatrixGroup MatrixGroup::cyclic(const ModularMatrix& g) { return MatrixGroup(g.modulus(), g.rows(), {g}); }

std::shared_ptr<const Closure> MatrixGroup::closure(std::size_t cap) const {
    if (cap == 0) throw Error(ErrorKind::InvalidParams, "closure cap must be positive");
    std::lock_guard lock(cache_->mu);
    if (cache_->closure) {
        if (cache_->closure->order() > cap)
            throw Error(ErrorKind::CapExceeded, "group order " + std::to_string(cache_->closure->order()) +
                                                    " exceeds cap " + std::to_string(cap));
        return cache_->closure;
    }
    auto c = std::make_shared<Closure>();
    auto add = [&](ModularMatrix m, std::size_t parent, std::size_t via) {
        if (c->elements.size() >= cap)
            throw Error(ErrorKind::CapExceeded, "closure grew past cap " + std::to_string(cap));
        c->index.emplace(m.entries(), c->elements.size());
        c->elements.push_back(std::move(m));
        c->parent.push_back(parent);
        c->via.push_back(via);
    };
    add(ModularMatrix::identity(dim_, mod_), 0, Closure::npos);
    for (std::size_t i = 0; i < c->elements.size(); ++i) {
        std::vector<std::size_t> row(gens_.size());
        for (std::size_t s = 0; s < gens_.size(); ++s) {
            ModularMatrix prod = c->elements[i] * gens_[s];
            if (auto it = c->index.find(prod.entries()); it != c->index.end()) {
                row[s] = it->second;
            } else {
                row[s] = c->elements.size();
                add(std::move(prod), i, s);
            }
        }
        c->right.push_back(std::move(row));
    }
    cache_->closure = c;
    return c;
}

bool MatrixGroup::contains(const ModularMatrix& g, std::size_t cap) const {
    return closure(cap)->find(g).has_value();
}

GroupTable MatrixGroup::table(std::size_t cap) const {
    auto c = closure(cap);
    const std::size_t n = c->order();
    GroupTable t;
    t.mult.assign(n, std::vector<std::size_t>(n));
    t.inverse.assign(n, 0);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            t.mult[a][b] = c->at(c->elements[a] * c->elements[b]);
            if (t.mult[a][b] == 0) t.inverse[a] = b;
        }
    return t;
}

std::uint64_t gl2_order(const Modulus& mod) {
    const std::uint64_t p = mod.p();
    std::uint64_t order = (p * p - 1) * (p * p - p);
    for (unsigned k = 1; k < mod.level(); ++k) order *= p * p * p * p;
    return order;
}

}  // namespace galrep::grpmod
