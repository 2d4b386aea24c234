#include "galrep/zring/howell.hpp"

#include "galrep/error.hpp"

#include <algorithm>
#include <functional>

namespace galrep::zring {

AbelianPGroupType::AbelianPGroupType(std::vector<unsigned> exponents) : exponents_(std::move(exponents)) {
    std::erase(exponents_, 0u);
    std::sort(exponents_.begin(), exponents_.end(), std::greater<>());
}

unsigned AbelianPGroupType::log_order() const noexcept {
    unsigned s = 0;
    for (unsigned e : exponents_) s += e;
    return s;
}

std::size_t AbelianPGroupType::count(unsigned e) const noexcept {
    return static_cast<std::size_t>(std::count(exponents_.begin(), exponents_.end(), e));
}

std::string AbelianPGroupType::to_string(std::uint64_t p) const {
    if (exponents_.empty()) return "0";
    std::string out;
    std::size_t i = 0;
    while (i < exponents_.size()) {
        std::size_t k = i;
        while (k < exponents_.size() && exponents_[k] == exponents_[i]) ++k;
        std::uint64_t order = 1;
        for (unsigned t = 0; t < exponents_[i]; ++t) order *= p;
        if (!out.empty()) out += " + ";
        const std::size_t mult = k - i;
        out += mult == 1 ? "Z/" + std::to_string(order) : "(Z/" + std::to_string(order) + ")^" + std::to_string(mult);
        i = k;
    }
    return out;
}

namespace {

bool is_zero_vec(const ModVector& v) {
    return std::all_of(v.begin(), v.end(), [](Residue x) { return x == 0; });
}

// row -= factor * pivot_row
void axpy(ModVector& row, Residue factor, const ModVector& pivot_row, const Modulus& mod) {
    if (factor == 0) return;
    for (std::size_t k = 0; k < row.size(); ++k) row[k] = mod.sub(row[k], mod.mul(factor, pivot_row[k]));
}

}  // namespace

std::vector<ModVector> howell_rows(const ModularMatrix& m) {
    const Modulus& mod = m.modulus();
    const std::size_t cols = m.cols();
    std::vector<ModVector> pool;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        ModVector r(m.row(i).begin(), m.row(i).end());
        if (!is_zero_vec(r)) pool.push_back(std::move(r));
    }

    struct Pivot {
        std::size_t col;
        unsigned val;
    };
    std::vector<ModVector> result;
    std::vector<Pivot> pivots;

    for (std::size_t c = 0; c < cols && !pool.empty(); ++c) {
        std::size_t best = pool.size();
        unsigned best_val = mod.level();
        for (std::size_t i = 0; i < pool.size(); ++i) {
            const unsigned v = mod.valuation(pool[i][c]);
            if (v < best_val) {
                best_val = v;
                best = i;
            }
        }
        if (best == pool.size()) continue;

        ModVector piv = std::move(pool[best]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(best));
        const Residue ppow = mod.p_power(best_val);
        const Residue unit = piv[c] / ppow;
        const Residue unit_inv = mod.inverse(unit);
        for (auto& x : piv) x = mod.mul(x, unit_inv);

        for (auto& r : pool) {
            if (r[c] != 0) axpy(r, r[c] / ppow, piv, mod);
        }
        if (best_val > 0) {
            ModVector extra = piv;
            const Residue ann = mod.p_power(mod.level() - best_val);
            for (auto& x : extra) x = mod.mul(x, ann);
            if (!is_zero_vec(extra)) pool.push_back(std::move(extra));
        }
        std::erase_if(pool, is_zero_vec);
        result.push_back(std::move(piv));
        pivots.push_back({c, best_val});
    }

    // reduce the entries above each pivot into [0, p^v)
    for (std::size_t i = 0; i < result.size(); ++i) {
        const std::size_t c = pivots[i].col;
        const Residue ppow = mod.p_power(pivots[i].val);
        for (std::size_t k = 0; k < i; ++k) {
            const Residue quot = result[k][c] / ppow;
            axpy(result[k], quot, result[i], mod);
        }
    }
    return result;
}

ModularMatrix canonical_form(const ModularMatrix& m) {
    std::vector<ModVector> rows = howell_rows(m);
    const std::size_t out_rows = std::max(rows.size(), m.rows());
    ModularMatrix out(out_rows, m.cols(), m.modulus());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out.set_residue(i, j, rows[i][j]);
    return out;
}

bool row_module_contains(const ModularMatrix& m, std::span<const Residue> b) {
    if (b.size() != m.cols()) throw Error(ErrorKind::DimensionMismatch, "vector length differs from column count");
    const Modulus& mod = m.modulus();
    ModVector r(b.begin(), b.end());
    for (auto& x : r) x %= mod.value();
    for (const ModVector& row : howell_rows(m)) {
        std::size_t c = 0;
        while (row[c] == 0) ++c;
        for (std::size_t k = 0; k < c; ++k)
            if (r[k] != 0) return false;
        const Residue ppow = row[c];  // pivots are normalised to p^v
        if (r[c] % ppow != 0) return false;
        axpy(r, r[c] / ppow, row, mod);
    }
    return is_zero_vec(r);
}

std::vector<ModVector> kernel(const ModularMatrix& m) {
    // x*[m^T | I] = [x*m^T | x]; rows of the Howell form with vanishing left
    // block generate the left kernel of m^T, i.e. the right kernel of m.
    const std::size_t r = m.rows();
    const std::size_t c = m.cols();
    ModularMatrix aug = ModularMatrix::hstack(m.transpose(), ModularMatrix::identity(c, m.modulus()));
    std::vector<ModVector> out;
    for (const ModVector& row : howell_rows(aug)) {
        bool left_zero = true;
        for (std::size_t k = 0; k < r; ++k)
            if (row[k] != 0) {
                left_zero = false;
                break;
            }
        if (left_zero) out.emplace_back(row.begin() + static_cast<std::ptrdiff_t>(r), row.end());
    }
    return out;
}

AbelianPGroupType structure(std::span<const ModVector> generators, const Modulus& mod) {
    if (generators.empty()) return {};
    const std::size_t cols = generators.front().size();
    std::vector<ModVector> a;
    for (const auto& g : generators) {
        if (g.size() != cols) throw Error(ErrorKind::DimensionMismatch, "generators have different lengths");
        ModVector r = g;
        for (auto& x : r) x %= mod.value();
        a.push_back(std::move(r));
    }
    // Smith-type diagonalisation: in Z/p^n the entry of least valuation
    // divides everything else in the remaining block.
    std::vector<unsigned> exponents;
    std::size_t top = 0;
    std::vector<std::size_t> col_order(cols);
    for (std::size_t k = 0; k < cols; ++k) col_order[k] = k;
    std::size_t left = 0;
    while (top < a.size() && left < cols) {
        std::size_t bi = 0, bj = 0;
        unsigned best = mod.level();
        for (std::size_t i = top; i < a.size(); ++i)
            for (std::size_t jj = left; jj < cols; ++jj) {
                const unsigned v = mod.valuation(a[i][col_order[jj]]);
                if (v < best) {
                    best = v;
                    bi = i;
                    bj = jj;
                }
            }
        if (best == mod.level()) break;
        std::swap(a[top], a[bi]);
        std::swap(col_order[left], col_order[bj]);
        const std::size_t pc = col_order[left];
        const Residue ppow = mod.p_power(best);
        const Residue unit_inv = mod.inverse(a[top][pc] / ppow);
        for (auto& x : a[top]) x = mod.mul(x, unit_inv);
        for (std::size_t i = top + 1; i < a.size(); ++i)
            if (a[i][pc] != 0) axpy(a[i], a[i][pc] / ppow, a[top], mod);
        // column operations only change the basis of the ambient module, so
        // it suffices to clear the pivot row for later pivots.
        for (std::size_t jj = left + 1; jj < cols; ++jj) a[top][col_order[jj]] = 0;
        exponents.push_back(mod.level() - best);
        ++top;
        ++left;
    }
    return AbelianPGroupType(std::move(exponents));
}

}  // namespace galrep::zring
