#pragma once

#include "galrep/zring/modulus.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace galrep::zring {

/// Row space over F_p built one row at a time, kept in reduced row echelon
/// form so a new row is reduced in a single pass over the pivots.
class PrimeFieldEchelon {
public:
    PrimeFieldEchelon(std::uint64_t p, std::size_t cols);

    std::size_t cols() const noexcept { return cols_; }
    std::size_t rank() const noexcept { return rows_.size(); }
    std::uint64_t p() const noexcept { return p_; }

    /// Returns true when the row was independent of those already added.
    bool add_row(std::span<const std::uint64_t> row);
    /// Reduce `row` against the current basis in place; returns true if it
    /// reduced to zero (the row lies in the span).
    bool reduce(std::vector<std::uint64_t>& row) const;
    bool contains(std::span<const std::uint64_t> row) const;

    /// Basis of {x : r.x = 0 for every added row r}.
    std::vector<std::vector<std::uint64_t>> nullspace() const;

    const std::vector<std::vector<std::uint64_t>>& basis_rows() const noexcept { return rows_; }
    const std::vector<std::size_t>& pivot_columns() const noexcept { return pivot_cols_; }

private:
    std::uint64_t p_;
    std::size_t cols_;
    std::vector<std::vector<std::uint64_t>> rows_;
    std::vector<std::size_t> pivot_cols_;
    std::vector<long> pivot_of_col_;  // -1 when the column carries no pivot
};

/// Rank of a list of rows over F_p.
std::size_t rank_mod_p(std::uint64_t p, std::size_t cols, std::span<const std::vector<std::uint64_t>> rows);

}  // namespace galrep::zring
