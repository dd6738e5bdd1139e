#pragma once

#include <vector>

#include "digicurv/boundary.hpp"
#include "digicurv/separability.hpp"

namespace digicurv {

/// Maximal digital circular arc: the cyclic edge range [i..j] of a curve
/// whose inner and outer pixel centers are circularly separable and which
/// cannot be extended on either end. Carries the smallest separating circle
/// and the discrete curvature k = 1/R (0 when only a halfplane separates).
struct Mdca {
    int i = 0;
    int j = 0;
    int n = 1;  // number of edges in the range (cyclic span + 1)
    SeparatingCircle circle;
    double k = 0.0;

    /// True when edge index e lies on the cyclic range [i..j].
    bool contains(int e, int curve_size) const {
        return ((e - i) % curve_size + curve_size) % curve_size <= n - 1;
    }
};

/// The complete, unique set of maximal arcs of a curve, ordered by initial
/// edge index. Together the arcs cover every edge.
struct MdcaSet {
    int curve_size = 0;
    std::vector<Mdca> arcs;
};

/// True iff the inner and outer pixel centers of the cyclic edge range
/// [i..j] are circularly separable (by a finite circle, either orientation).
/// The range may cover the whole curve (cyclic span N-1).
bool is_dca(const DigitalCurve& curve, int i, int j);

/// Computes all maximal digital circular arcs of a closed curve.
///
/// A sliding window over start edges finds, for every i, the furthest end
/// J(i) such that [i..J(i)] is separable; separability is monotone under
/// edge removal, so J never moves backward and the sweep touches each edge
/// O(1) times. The maximal arcs are exactly the windows with J(i) > J(i-1);
/// enumerating them this way makes the result independent of the starting
/// edge. If the whole curve is one arc, a single arc covering all edges is
/// returned.
MdcaSet compute_mdcas(const DigitalCurve& curve);

}  // namespace digicurv
