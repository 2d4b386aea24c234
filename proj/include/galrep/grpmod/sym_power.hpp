#pragma once

#include "galrep/zring/matrix.hpp"

namespace galrep::grpmod {

/// Action of a 2x2 matrix on Sym^j with basis u_i = v1^{j-i} v2^i. Column i
/// holds the image of u_i.
zring::ModularMatrix sym_power(const zring::ModularMatrix& m, unsigned j);

/// Sym^j(m) scaled by det(m)^twist.
zring::ModularMatrix sym_power_twisted(const zring::ModularMatrix& m, unsigned j, unsigned twist);

}  // namespace galrep::grpmod
