#include "galrep/zring/prime_field.hpp"

#include "galrep/error.hpp"

namespace galrep::zring {

namespace {

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
    std::uint64_t r = 1, b = a % p, e = p - 2;
    while (e) {
        if (e & 1) r = static_cast<std::uint64_t>((static_cast<unsigned __int128>(r) * b) % p);
        b = static_cast<std::uint64_t>((static_cast<unsigned __int128>(b) * b) % p);
        e >>= 1;
    }
    return r;
}

inline std::uint64_t mulp(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    if ((a | b) <= 0xffffffffULL) return (a * b) % p;
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

// dst -= f * src over F_p
void sub_scaled(std::vector<std::uint64_t>& dst, std::uint64_t f, const std::vector<std::uint64_t>& src,
                std::uint64_t p) {
    const std::uint64_t g = p - f;  // adding (p - f) * src
    for (std::size_t k = 0; k < dst.size(); ++k) {
        if (src[k] == 0) continue;
        dst[k] = (dst[k] + mulp(g, src[k], p)) % p;
    }
}

}  // namespace

PrimeFieldEchelon::PrimeFieldEchelon(std::uint64_t p, std::size_t cols)
    : p_(p), cols_(cols), pivot_of_col_(cols, -1) {
    if (!is_prime(p)) throw Error(ErrorKind::InvalidModulus, "echelon over a non-prime modulus");
}

bool PrimeFieldEchelon::reduce(std::vector<std::uint64_t>& row) const {
    if (row.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "row length differs from column count");
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const std::uint64_t f = row[pivot_cols_[i]];
        if (f != 0) sub_scaled(row, f, rows_[i], p_);
    }
    for (std::uint64_t x : row)
        if (x != 0) return false;
    return true;
}

bool PrimeFieldEchelon::contains(std::span<const std::uint64_t> row) const {
    std::vector<std::uint64_t> r(row.begin(), row.end());
    for (auto& x : r) x %= p_;
    return reduce(r);
}

bool PrimeFieldEchelon::add_row(std::span<const std::uint64_t> row) {
    if (rows_.size() == cols_) return false;
    std::vector<std::uint64_t> r(row.begin(), row.end());
    for (auto& x : r) x %= p_;
    if (reduce(r)) return false;
    std::size_t c = 0;
    while (r[c] == 0) ++c;
    const std::uint64_t inv = inv_mod(r[c], p_);
    for (auto& x : r) x = mulp(x, inv, p_);
    for (auto& existing : rows_) {
        const std::uint64_t f = existing[c];
        if (f != 0) sub_scaled(existing, f, r, p_);
    }
    pivot_of_col_[c] = static_cast<long>(rows_.size());
    pivot_cols_.push_back(c);
    rows_.push_back(std::move(r));
    return true;
}

std::vector<std::vector<std::uint64_t>> PrimeFieldEchelon::nullspace() const {
    std::vector<std::vector<std::uint64_t>> out;
    for (std::size_t free = 0; free < cols_; ++free) {
        if (pivot_of_col_[free] >= 0) continue;
        std::vector<std::uint64_t> v(cols_, 0);
        v[free] = 1;
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const std::uint64_t x = rows_[i][free];
            if (x != 0) v[pivot_cols_[i]] = (p_ - x) % p_;
        }
        out.push_back(std::move(v));
    }
    return out;
}

std::size_t rank_mod_p(std::uint64_t p, std::size_t cols, std::span<const std::vector<std::uint64_t>> rows) {
    PrimeFieldEchelon e(p, cols);
    for (const auto& r : rows) {
        e.add_row(r);
        if (e.rank() == cols) break;
    }
    return e.rank();
}

}  // namespace galrep::zring
