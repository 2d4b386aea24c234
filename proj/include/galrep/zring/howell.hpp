#pragma once

#include "galrep/zring/matrix.hpp"

#include <span>
#include <string>
#include <vector>

namespace galrep::zring {

/// Isomorphism type of a finite abelian p-group, written as the direct sum
/// of Z/p^e for each exponent e. Exponents are kept sorted descending; the
/// empty list is the trivial group.
class AbelianPGroupType {
public:
    AbelianPGroupType() = default;
    explicit AbelianPGroupType(std::vector<unsigned> exponents);

    const std::vector<unsigned>& exponents() const noexcept { return exponents_; }
    bool is_trivial() const noexcept { return exponents_.empty(); }
    std::size_t rank() const noexcept { return exponents_.size(); }
    /// log_p of the group order.
    unsigned log_order() const noexcept;
    /// Number of cyclic summands with exponent exactly `e`.
    std::size_t count(unsigned e) const noexcept;

    /// e.g. "Z/25 + (Z/5)^2", or "0" for the trivial group.
    std::string to_string(std::uint64_t p) const;

    friend bool operator==(const AbelianPGroupType&, const AbelianPGroupType&) = default;

private:
    std::vector<unsigned> exponents_;
};

/// Howell form of the row module: echelon rows whose pivots are powers of p,
/// entries above each pivot reduced below it, and closed under the
/// annihilator step so that membership can be read off row by row. Zero rows
/// pad the result to at least the input row count.
ModularMatrix canonical_form(const ModularMatrix& m);

/// Nonzero rows of the Howell form.
std::vector<ModVector> howell_rows(const ModularMatrix& m);

/// Whether b lies in the row module of `m` (i.e. x*m = b is solvable).
bool row_module_contains(const ModularMatrix& m, std::span<const Residue> b);

/// Generators of {v : m*v = 0}.
std::vector<ModVector> kernel(const ModularMatrix& m);

/// Type of the submodule of (Z/p^n)^len generated by `generators`.
AbelianPGroupType structure(std::span<const ModVector> generators, const Modulus& mod);

}  // namespace galrep::zring
