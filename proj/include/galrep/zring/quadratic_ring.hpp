#pragma once

#include "galrep/zring/matrix.hpp"

#include <vector>

namespace galrep::zring {

/// W/p^n for the unramified quadratic extension, presented as
/// (Z/p^n)[t]/(t^2 - r) with r the least quadratic non-residue mod p.
class UnramifiedQuadraticRing {
public:
    struct Element {
        Residue x = 0;  // x + y t
        Residue y = 0;
        friend bool operator==(const Element&, const Element&) = default;
    };

    explicit UnramifiedQuadraticRing(Modulus mod);

    const Modulus& modulus() const noexcept { return mod_; }
    Residue nonresidue() const noexcept { return r_; }

    Element make(std::int64_t x, std::int64_t y) const { return {mod_.reduce(x), mod_.reduce(y)}; }
    Element one() const { return {1 % mod_.value(), 0}; }
    Element add(Element a, Element b) const { return {mod_.add(a.x, b.x), mod_.add(a.y, b.y)}; }
    Element sub(Element a, Element b) const { return {mod_.sub(a.x, b.x), mod_.sub(a.y, b.y)}; }
    Element mul(Element a, Element b) const;
    Element pow(Element a, std::uint64_t e) const;

    Residue norm(Element a) const { return mod_.sub(mod_.mul(a.x, a.x), mod_.mul(r_, mod_.mul(a.y, a.y))); }
    bool is_unit(Element a) const { return mod_.is_unit(norm(a)); }

    /// Matrix of multiplication by `a` on the Z/p^n-basis {1, t}.
    ModularMatrix multiplication_matrix(Element a) const;

    /// p^{2(n-1)} (p^2 - 1).
    std::uint64_t unit_group_order() const noexcept;
    std::vector<Element> units() const;
    /// A generator of the Teichmuller part together with 1 + p and 1 + p t
    /// (the latter two only when n >= 2); together they generate the units.
    std::vector<Element> unit_group_generators() const;
    /// An element whose reduction generates F_{p^2}^x.
    Element primitive_element() const;

private:
    Modulus mod_;
    Residue r_;
};

}  // namespace galrep::zring
