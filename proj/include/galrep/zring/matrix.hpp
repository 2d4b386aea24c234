#pragma once

#include "galrep/zring/modulus.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace galrep::zring {

/// Dense matrix over Z/p^n. Entries are always kept reduced into [0, p^n).
class ModularMatrix {
public:
    ModularMatrix(std::size_t rows, std::size_t cols, Modulus mod);
    ModularMatrix(Modulus mod, std::initializer_list<std::initializer_list<std::int64_t>> rows);

    static ModularMatrix from_rows(Modulus mod, const std::vector<std::vector<std::int64_t>>& rows);
    static ModularMatrix from_residue_rows(Modulus mod, std::size_t cols, std::span<const ModVector> rows);
    static ModularMatrix identity(std::size_t n, Modulus mod);
    static ModularMatrix scalar(std::size_t n, std::int64_t c, Modulus mod);
    static ModularMatrix diagonal(Modulus mod, std::span<const std::int64_t> entries);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }
    const Modulus& modulus() const noexcept { return mod_; }

    Residue operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * cols_ + j]; }
    void set(std::size_t i, std::size_t j, std::int64_t value) { data_[i * cols_ + j] = mod_.reduce(value); }
    void set_residue(std::size_t i, std::size_t j, Residue value) { data_[i * cols_ + j] = value % mod_.value(); }

    std::span<const Residue> row(std::size_t i) const noexcept { return {data_.data() + i * cols_, cols_}; }
    const std::vector<Residue>& entries() const noexcept { return data_; }

    ModularMatrix operator*(const ModularMatrix& rhs) const;
    ModularMatrix operator+(const ModularMatrix& rhs) const;
    ModularMatrix operator-(const ModularMatrix& rhs) const;
    ModVector apply(std::span<const Residue> v) const;

    ModularMatrix scaled(Residue c) const;
    ModularMatrix transpose() const;
    ModularMatrix power(std::uint64_t e) const;

    bool is_zero() const noexcept;
    bool is_identity() const noexcept;
    bool is_scalar() const noexcept;

    /// Invertible over Z/p^n iff the reduction mod p is invertible.
    bool is_invertible() const;
    ModularMatrix inverse() const;
    /// Cofactor expansion; intended for the small matrices used here.
    Residue determinant() const;

    /// Same entries reinterpreted modulo p^k for k <= level (reduction map).
    ModularMatrix reduced_to(const Modulus& coarser) const;

    static ModularMatrix vstack(std::span<const ModularMatrix> blocks);
    static ModularMatrix hstack(const ModularMatrix& a, const ModularMatrix& b);

    std::string to_string() const;

    friend bool operator==(const ModularMatrix& a, const ModularMatrix& b) noexcept {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.mod_ == b.mod_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_;
    std::size_t cols_;
    Modulus mod_;
    std::vector<Residue> data_;
};

struct ResidueVectorHash {
    std::size_t operator()(const std::vector<Residue>& v) const noexcept {
        std::size_t h = v.size();
        for (Residue x : v) h ^= std::hash<Residue>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }
};

}  // namespace galrep::zring
