#include "galrep/zring/matrix.hpp"

#include "galrep/error.hpp"

#include <sstream>
#include <utility>

namespace galrep::zring {

namespace {

void require_same_shape(const ModularMatrix& a, const ModularMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols() || !(a.modulus() == b.modulus())) {
        throw Error(ErrorKind::DimensionMismatch, "matrix shapes or moduli differ");
    }
}

}  // namespace

ModularMatrix::ModularMatrix(std::size_t rows, std::size_t cols, Modulus mod)
    : rows_(rows), cols_(cols), mod_(mod), data_(rows * cols, 0) {}

ModularMatrix::ModularMatrix(Modulus mod, std::initializer_list<std::initializer_list<std::int64_t>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()), mod_(mod) {
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "ragged matrix literal");
        for (std::int64_t x : r) data_.push_back(mod_.reduce(x));
    }
}

ModularMatrix ModularMatrix::from_rows(Modulus mod, const std::vector<std::vector<std::int64_t>>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    ModularMatrix m(rows.size(), cols, mod);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw Error(ErrorKind::DimensionMismatch, "ragged matrix rows");
        for (std::size_t j = 0; j < cols; ++j) m.set(i, j, rows[i][j]);
    }
    return m;
}

ModularMatrix ModularMatrix::from_residue_rows(Modulus mod, std::size_t cols, std::span<const ModVector> rows) {
    ModularMatrix m(rows.size(), cols, mod);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw Error(ErrorKind::DimensionMismatch, "vector length differs from column count");
        for (std::size_t j = 0; j < cols; ++j) m.set_residue(i, j, rows[i][j]);
    }
    return m;
}

ModularMatrix ModularMatrix::identity(std::size_t n, Modulus mod) { return scalar(n, 1, mod); }

ModularMatrix ModularMatrix::scalar(std::size_t n, std::int64_t c, Modulus mod) {
    ModularMatrix m(n, n, mod);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, c);
    return m;
}

ModularMatrix ModularMatrix::diagonal(Modulus mod, std::span<const std::int64_t> entries) {
    ModularMatrix m(entries.size(), entries.size(), mod);
    for (std::size_t i = 0; i < entries.size(); ++i) m.set(i, i, entries[i]);
    return m;
}

ModularMatrix ModularMatrix::operator*(const ModularMatrix& rhs) const {
    if (cols_ != rhs.rows_ || !(mod_ == rhs.mod_)) {
        throw Error(ErrorKind::DimensionMismatch, "cannot multiply " + std::to_string(rows_) + "x" +
                                                      std::to_string(cols_) + " by " + std::to_string(rhs.rows_) +
                                                      "x" + std::to_string(rhs.cols_));
    }
    ModularMatrix out(rows_, rhs.cols_, mod_);
    const std::uint64_t q = mod_.value();
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < rhs.cols_; ++j) {
            unsigned __int128 acc = 0;
            for (std::size_t k = 0; k < cols_; ++k) {
                acc += static_cast<unsigned __int128>(data_[i * cols_ + k]) * rhs.data_[k * rhs.cols_ + j];
                // at most 2^124 per term; fold before the accumulator can overflow
                if ((k & 7) == 7) acc %= q;
            }
            out.data_[i * rhs.cols_ + j] = static_cast<Residue>(acc % q);
        }
    }
    return out;
}

ModularMatrix ModularMatrix::operator+(const ModularMatrix& rhs) const {
    require_same_shape(*this, rhs);
    ModularMatrix out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = mod_.add(data_[i], rhs.data_[i]);
    return out;
}

ModularMatrix ModularMatrix::operator-(const ModularMatrix& rhs) const {
    require_same_shape(*this, rhs);
    ModularMatrix out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = mod_.sub(data_[i], rhs.data_[i]);
    return out;
}

ModVector ModularMatrix::apply(std::span<const Residue> v) const {
    if (v.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "vector length differs from column count");
    ModVector out(rows_, 0);
    for (std::size_t i = 0; i < rows_; ++i) {
        Residue acc = 0;
        for (std::size_t k = 0; k < cols_; ++k) acc = mod_.add(acc, mod_.mul(data_[i * cols_ + k], v[k]));
        out[i] = acc;
    }
    return out;
}

ModularMatrix ModularMatrix::scaled(Residue c) const {
    ModularMatrix out = *this;
    for (auto& x : out.data_) x = mod_.mul(x, c % mod_.value());
    return out;
}

ModularMatrix ModularMatrix::transpose() const {
    ModularMatrix out(cols_, rows_, mod_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.data_[j * rows_ + i] = data_[i * cols_ + j];
    return out;
}

ModularMatrix ModularMatrix::power(std::uint64_t e) const {
    if (!is_square()) throw Error(ErrorKind::DimensionMismatch, "power of a non-square matrix");
    ModularMatrix result = identity(rows_, mod_);
    ModularMatrix base = *this;
    while (e > 0) {
        if (e & 1) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

bool ModularMatrix::is_zero() const noexcept {
    for (Residue x : data_)
        if (x != 0) return false;
    return true;
}

bool ModularMatrix::is_identity() const noexcept {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (data_[i * cols_ + j] != (i == j ? 1 : 0)) return false;
    return true;
}

bool ModularMatrix::is_scalar() const noexcept {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            Residue x = data_[i * cols_ + j];
            if (i != j && x != 0) return false;
            if (i == j && x != data_[0]) return false;
        }
    return true;
}

bool ModularMatrix::is_invertible() const {
    if (!is_square()) return false;
    const Modulus fp = Modulus::prime_field(mod_.p());
    std::vector<Residue> a(data_.size());
    for (std::size_t i = 0; i < data_.size(); ++i) a[i] = data_[i] % fp.value();
    const std::size_t n = rows_;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && a[piv * n + c] == 0) ++piv;
        if (piv == n) return false;
        if (piv != c)
            for (std::size_t k = 0; k < n; ++k) std::swap(a[piv * n + k], a[c * n + k]);
        const Residue inv = fp.inverse(a[c * n + c]);
        for (std::size_t r = c + 1; r < n; ++r) {
            const Residue f = fp.mul(a[r * n + c], inv);
            if (f == 0) continue;
            for (std::size_t k = c; k < n; ++k) a[r * n + k] = fp.sub(a[r * n + k], fp.mul(f, a[c * n + k]));
        }
    }
    return true;
}

ModularMatrix ModularMatrix::inverse() const {
    if (!is_square()) throw Error(ErrorKind::DimensionMismatch, "inverse of a non-square matrix");
    const std::size_t n = rows_;
    ModularMatrix a = *this;
    ModularMatrix inv = identity(n, mod_);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && !mod_.is_unit(a(piv, c))) ++piv;
        if (piv == n) throw Error(ErrorKind::InvalidParams, "matrix is not invertible modulo " + mod_.to_string());
        if (piv != c) {
            for (std::size_t k = 0; k < n; ++k) {
                std::swap(a.data_[piv * n + k], a.data_[c * n + k]);
                std::swap(inv.data_[piv * n + k], inv.data_[c * n + k]);
            }
        }
        const Residue u = mod_.inverse(a(c, c));
        for (std::size_t k = 0; k < n; ++k) {
            a.data_[c * n + k] = mod_.mul(a.data_[c * n + k], u);
            inv.data_[c * n + k] = mod_.mul(inv.data_[c * n + k], u);
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c) continue;
            const Residue f = a(r, c);
            if (f == 0) continue;
            for (std::size_t k = 0; k < n; ++k) {
                a.data_[r * n + k] = mod_.sub(a.data_[r * n + k], mod_.mul(f, a.data_[c * n + k]));
                inv.data_[r * n + k] = mod_.sub(inv.data_[r * n + k], mod_.mul(f, inv.data_[c * n + k]));
            }
        }
    }
    return inv;
}

Residue ModularMatrix::determinant() const {
    if (!is_square()) throw Error(ErrorKind::DimensionMismatch, "determinant of a non-square matrix");
    const std::size_t n = rows_;
    if (n == 0) return 1 % mod_.value();
    if (n == 1) return data_[0];
    if (n == 2) return mod_.sub(mod_.mul(data_[0], data_[3]), mod_.mul(data_[1], data_[2]));
    Residue det = 0;
    for (std::size_t c = 0; c < n; ++c) {
        ModularMatrix minor(n - 1, n - 1, mod_);
        for (std::size_t i = 1; i < n; ++i) {
            std::size_t jj = 0;
            for (std::size_t j = 0; j < n; ++j) {
                if (j == c) continue;
                minor.data_[(i - 1) * (n - 1) + jj++] = data_[i * n + j];
            }
        }
        const Residue term = mod_.mul(data_[c], minor.determinant());
        det = (c % 2 == 0) ? mod_.add(det, term) : mod_.sub(det, term);
    }
    return det;
}

ModularMatrix ModularMatrix::reduced_to(const Modulus& coarser) const {
    if (coarser.p() != mod_.p() || coarser.level() > mod_.level()) {
        throw Error(ErrorKind::InvalidModulus, "reduction target must be a coarser level of the same prime");
    }
    ModularMatrix out(rows_, cols_, coarser);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] % coarser.value();
    return out;
}

ModularMatrix ModularMatrix::vstack(std::span<const ModularMatrix> blocks) {
    if (blocks.empty()) throw Error(ErrorKind::DimensionMismatch, "vstack of nothing");
    const std::size_t cols = blocks.front().cols();
    std::size_t rows = 0;
    for (const auto& b : blocks) {
        if (b.cols() != cols || !(b.modulus() == blocks.front().modulus()))
            throw Error(ErrorKind::DimensionMismatch, "vstack blocks disagree");
        rows += b.rows();
    }
    ModularMatrix out(rows, cols, blocks.front().modulus());
    std::size_t offset = 0;
    for (const auto& b : blocks) {
        std::copy(b.data_.begin(), b.data_.end(), out.data_.begin() + static_cast<std::ptrdiff_t>(offset * cols));
        offset += b.rows();
    }
    return out;
}

ModularMatrix ModularMatrix::hstack(const ModularMatrix& a, const ModularMatrix& b) {
    if (a.rows() != b.rows() || !(a.modulus() == b.modulus()))
        throw Error(ErrorKind::DimensionMismatch, "hstack blocks disagree");
    ModularMatrix out(a.rows(), a.cols() + b.cols(), a.modulus());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) out.data_[i * out.cols_ + j] = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) out.data_[i * out.cols_ + a.cols() + j] = b(i, j);
    }
    return out;
}

std::string ModularMatrix::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < rows_; ++i) {
        if (i) os << ',';
        os << '[';
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) os << ',';
            os << data_[i * cols_ + j];
        }
        os << ']';
    }
    os << "] mod " << mod_.value();
    return os.str();
}

}  // namespace galrep::zring
