#pragma once

#include "galrep/localmodel/models.hpp"

namespace galrep::localmodel {

struct BoundReport {
    LocalCase local_case = LocalCase::A;
    unsigned j = 0;
    unsigned raw = 0;
    unsigned bound = 0;
    bool refined = false;
    bool excluded_by_b_prime = false;
    std::vector<TraceEntry> trace;
};

/// dim Im(Res^ur_p) <= dim H^0(Q_p, A)/p + j + dim H^0(Q_p, V), lowered by one
/// in case B where the restriction to inertia has a nonzero kernel. Case D is
/// returned flagged, since hypothesis (b') rules it out. Throws InvalidCase
/// when the dimensions do not match the case.
BoundReport bound_dim_image(LocalCase c, unsigned j, unsigned h0_quotient_dim, unsigned h0_v_dim);

}  // namespace galrep::localmodel
