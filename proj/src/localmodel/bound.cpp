#include "galrep/localmodel/bound.hpp"

#include "galrep/error.hpp"

namespace galrep::localmodel {

BoundReport bound_dim_image(LocalCase c, unsigned j, unsigned h0_quotient_dim, unsigned h0_v_dim) {
    const unsigned expected_quotient = (c == LocalCase::B || c == LocalCase::D) ? 1 : 0;
    if (h0_quotient_dim != expected_quotient || h0_v_dim != 0)
        throw Error(ErrorKind::InvalidCase, std::string("dimensions (") + std::to_string(h0_quotient_dim) + "," +
                                                std::to_string(h0_v_dim) + ") do not match case " + to_string(c));
    if (j == 0) throw Error(ErrorKind::InvalidParams, "j must be positive");

    BoundReport r;
    r.local_case = c;
    r.j = j;
    r.raw = h0_quotient_dim + j + h0_v_dim;
    r.bound = r.raw;
    r.trace.push_back({"local-exact-sequence",
                       "dim Im(Loc_p) <= dim H^0(Q_p,A)/p + dim H^1_f(Q_p,A)[p] = " + std::to_string(h0_quotient_dim) +
                           " + dim H^1_f(Q_p,A)[p]"});
    r.trace.push_back({"hodge-constant", "dim D_dR/D_dR^+ = (j+1) - 1 = " + std::to_string(j) +
                                             ", so dim H^1_f(Q_p,A)[p] = " + std::to_string(j) + " + " +
                                             std::to_string(h0_v_dim)});
    r.trace.push_back({"local-bound", "raw bound " + std::to_string(h0_quotient_dim) + " + " + std::to_string(j) +
                                          " + " + std::to_string(h0_v_dim) + " = " + std::to_string(r.raw)});
    if (c == LocalCase::B) {
        r.bound = r.raw - 1;
        r.refined = true;
        r.trace.push_back({"case-b-noninjective",
                           "H^0(Q_p,A)/p has dim 1 but H^0(Q_p^ur,A)/p = 0, so restriction to inertia has a kernel "
                           "of dim >= 1; bound " + std::to_string(r.bound)});
    }
    if (c == LocalCase::D) {
        r.excluded_by_b_prime = true;
        r.trace.push_back({"case-d-excluded", "case D does not occur under hypothesis (b')"});
    }
    return r;
}

}  // namespace galrep::localmodel
