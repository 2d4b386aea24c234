#pragma once

#include "galrep/ecq/curve.hpp"

#include <utility>
#include <vector>

namespace galrep::ecq {

struct Factorization {
    std::vector<std::pair<BigInt, unsigned>> primes;  // ascending
    BigInt cofactor = 1;                              // unfactored composite part, 1 when complete
    bool complete() const { return cofactor == 1; }
};

/// Trial division, then Pollard-Brent rho with a bounded number of steps.
/// Whatever resists both is returned as the cofactor.
Factorization factor(BigInt n);

bool is_probable_prime(const BigInt& n);

}  // namespace galrep::ecq
