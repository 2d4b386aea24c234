#include "galrep/zring/quadratic_ring.hpp"

#include "galrep/error.hpp"

namespace galrep::zring {

namespace {

Residue least_nonresidue(std::uint64_t p) {
    const Modulus fp = Modulus::prime_field(p);
    for (Residue a = 2; a < p; ++a) {
        if (fp.pow(a, (p - 1) / 2) == p - 1) return a;
    }
    throw Error(ErrorKind::InvalidModulus, "no quadratic non-residue found");
}

}  // namespace

UnramifiedQuadraticRing::UnramifiedQuadraticRing(Modulus mod) : mod_(mod), r_(least_nonresidue(mod.p())) {}

UnramifiedQuadraticRing::Element UnramifiedQuadraticRing::mul(Element a, Element b) const {
    const Residue x = mod_.add(mod_.mul(a.x, b.x), mod_.mul(r_, mod_.mul(a.y, b.y)));
    const Residue y = mod_.add(mod_.mul(a.x, b.y), mod_.mul(a.y, b.x));
    return {x, y};
}

UnramifiedQuadraticRing::Element UnramifiedQuadraticRing::pow(Element a, std::uint64_t e) const {
    Element result = one();
    while (e > 0) {
        if (e & 1) result = mul(result, a);
        a = mul(a, a);
        e >>= 1;
    }
    return result;
}

ModularMatrix UnramifiedQuadraticRing::multiplication_matrix(Element a) const {
    ModularMatrix m(2, 2, mod_);
    m.set_residue(0, 0, a.x);
    m.set_residue(0, 1, mod_.mul(r_, a.y));
    m.set_residue(1, 0, a.y);
    m.set_residue(1, 1, a.x);
    return m;
}

std::uint64_t UnramifiedQuadraticRing::unit_group_order() const noexcept {
    const std::uint64_t p = mod_.p();
    const std::uint64_t pn1 = mod_.value() / p;
    return pn1 * pn1 * (p * p - 1);
}

std::vector<UnramifiedQuadraticRing::Element> UnramifiedQuadraticRing::units() const {
    std::vector<Element> out;
    const std::uint64_t q = mod_.value();
    for (Residue x = 0; x < q; ++x)
        for (Residue y = 0; y < q; ++y) {
            Element e{x, y};
            if (is_unit(e)) out.push_back(e);
        }
    return out;
}

UnramifiedQuadraticRing::Element UnramifiedQuadraticRing::primitive_element() const {
    const std::uint64_t p = mod_.p();
    const UnramifiedQuadraticRing residue_ring(Modulus::prime_field(p));
    const std::uint64_t order = p * p - 1;
    const auto ells = prime_divisors(order);
    for (Residue y = 1; y < p; ++y)
        for (Residue x = 0; x < p; ++x) {
            const Element e{x, y};
            bool primitive = true;
            for (std::uint64_t ell : ells) {
                if (residue_ring.pow(e, order / ell) == residue_ring.one()) {
                    primitive = false;
                    break;
                }
            }
            if (primitive) return e;
        }
    throw Error(ErrorKind::InvalidModulus, "no primitive element of F_{p^2} found");
}

std::vector<UnramifiedQuadraticRing::Element> UnramifiedQuadraticRing::unit_group_generators() const {
    std::vector<Element> gens{primitive_element()};
    if (mod_.level() >= 2) {
        gens.push_back(make(1 + static_cast<std::int64_t>(mod_.p()), 0));
        gens.push_back(make(1, static_cast<std::int64_t>(mod_.p())));
    }
    return gens;
}

}  // namespace galrep::zring
