#include "galrep/grpmod/sym_power.hpp"

#include "galrep/error.hpp"

namespace galrep::grpmod {

using zring::ModularMatrix;
using zring::Residue;

namespace {

// Polynomials in v2 with v1 set to 1; coefficient k multiplies v1^{deg-k} v2^k.
std::vector<Residue> poly_mul(const zring::Modulus& mod, const std::vector<Residue>& a, const std::vector<Residue>& b) {
    std::vector<Residue> out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < b.size(); ++k) out[i + k] = mod.add(out[i + k], mod.mul(a[i], b[k]));
    return out;
}

}  // namespace

ModularMatrix sym_power(const ModularMatrix& m, unsigned j) {
    if (m.rows() != 2 || m.cols() != 2) throw Error(ErrorKind::DimensionMismatch, "sym_power expects a 2x2 matrix");
    const auto& mod = m.modulus();
    const std::vector<Residue> image_v1{m(0, 0), m(1, 0)};
    const std::vector<Residue> image_v2{m(0, 1), m(1, 1)};

    // powers[k] = image(v1)^k and image(v2)^k
    std::vector<std::vector<Residue>> pow1{{1 % mod.value()}}, pow2{{1 % mod.value()}};
    for (unsigned k = 1; k <= j; ++k) {
        pow1.push_back(poly_mul(mod, pow1.back(), image_v1));
        pow2.push_back(poly_mul(mod, pow2.back(), image_v2));
    }
    ModularMatrix out(j + 1, j + 1, mod);
    for (unsigned i = 0; i <= j; ++i) {
        const auto col = poly_mul(mod, pow1[j - i], pow2[i]);
        for (unsigned k = 0; k <= j; ++k) out.set_residue(k, i, col[k]);
    }
    return out;
}

ModularMatrix sym_power_twisted(const ModularMatrix& m, unsigned j, unsigned twist) {
    const auto& mod = m.modulus();
    return sym_power(m, j).scaled(mod.pow(m.determinant(), twist));
}

}  // namespace galrep::grpmod
