#include "galrep/error.hpp"

#include "common.hpp"

namespace galrep::localmodel {

namespace {

// Lift h of order k (prime to p) from level n to level n+1: any lift raised
// to e with e = 1 mod k and e = 0 mod p again has order dividing k.
ModularMatrix lift(const ModularMatrix& h, std::size_t k, const Modulus& up) {
    ModularMatrix raw(2, 2, up);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t c = 0; c < 2; ++c) raw.set_residue(i, c, h(i, c));
    const Modulus fp(up.p(), 1);
    const std::uint64_t x = fp.neg(fp.inverse(k % up.p()));
    return raw.power(1 + k * x);
}

}  // namespace

LocalH0Report potentially_good_h0(const PotentiallyGoodModel& model) {
    detail::check_j(model.p, model.j);
    const auto mod = detail::checked_modulus(model.p, model.n);
    const auto up = detail::checked_modulus(model.p, model.n + 1);

    const grpmod::MatrixGroup phi(mod, 2, model.image_generators);
    const auto order = phi.order();
    if (order % model.p == 0)
        throw Error(ErrorKind::NotPrimeToP, "inertia image has order " + std::to_string(order) + ", divisible by p");

    std::vector<ModularMatrix> lifted;
    for (const auto& h : model.image_generators) lifted.push_back(lift(h, grpmod::MatrixGroup::cyclic(h).order(), up));
    const auto lifted_order = grpmod::MatrixGroup(up, 2, lifted).order();
    if (lifted_order != order)
        throw Error(ErrorKind::InvalidParams, "generator lifts to level n+1 do not generate a group of order " +
                                                  std::to_string(order));

    const auto at_n = detail::sym_invariants(model.image_generators, model.j, mod);
    const auto at_n1 = detail::sym_invariants(lifted, model.j, up);
    const bool free_n = at_n.type.count(model.n) == at_n.type.rank();
    const bool free_n1 = at_n1.type.count(model.n + 1) == at_n1.type.rank();
    if (!free_n || !free_n1 || at_n.type.rank() != at_n1.type.rank())
        throw Error(ErrorKind::InvalidParams, "invariants of a prime-to-p image are not free of constant rank");

    LocalH0Report r;
    r.p = model.p;
    r.level = model.n;
    r.j = model.j;
    r.level_structure = at_n.type;
    r.generators = at_n.generators;
    r.limit_quotient_dim = 0;
    r.h0_v_dim = static_cast<unsigned>(at_n.type.rank());
    r.method = "brute force (levels n, n+1)";
    r.trace.push_back({"potentially-good-divisible",
                       "|Phi| = " + std::to_string(order) +
                           " is prime to p, so H^0(A) = T^G (x) Q_p/Z_p is divisible; free rank " +
                           std::to_string(r.h0_v_dim)});
    r.note = "invariants are free over Z/p^n and Z/p^{n+1} with the same rank";
    return r;
}

}  // namespace galrep::localmodel
