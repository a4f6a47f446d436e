#pragma once

#include <utility>
#include <vector>

#include "dessin.hpp"

namespace dessin {

enum class Axis { kY, kX };

// An ordered pair (a, b) of fixed points of the axis generator, eligible for
// joining. Y-handles satisfy b = a z^(1-k) x with k in {1,2,3}; x-handles
// satisfy b = a (yx)^k y, reported with k = 1 (trivial) or the minimal
// orientation exponent otherwise (2 for all type-(3,2,7) dessins).
struct Handle {
    Axis axis;
    int k;
    int a, b;
    bool operator==(const Handle& o) const {
        return axis == o.axis && k == o.k && a == o.a && b == o.b;
    }
};

// Deterministic enumeration, sorted by (k, a, b). The defining walk is
// rejected if an intermediate application of the axis partner lands on one of
// its fixed points, i.e. no other free edge may lie strictly between a and b
// along the face. That separates a genuine (3)-handle (dessin B has one) from
// the third fixed-point pair of S, which satisfies the bare relation but is
// not a handle.
std::vector<Handle> y_handles(const Dessin& d);
std::vector<Handle> x_handles(const Dessin& d);

int max_disjoint_handles(const std::vector<Handle>& handles, int k, Axis axis);

// True iff two distinct y-handles share a z-cycle (equivalently a fixed
// point); among the type-(3,2,7) catalog this holds exactly for B, S, Sbar.
bool same_face_check(const Dessin& d);

Dessin y_join(const Dessin& d1, const Handle& h1, const Dessin& d2,
              const Handle& h2);
Dessin multiple_y_join(const Dessin& d1, const Dessin& d2,
                       const std::vector<std::pair<Handle, Handle>>& pairs);

// The deliberately crossed pairing (a1<->b2, b1<->a2); the result is usually
// not of the original type.
Dessin twist_y_join(const Dessin& d1, const Handle& h1, const Dessin& d2,
                    const Handle& h2);

// d-fold x-join; d = parts.size() must divide the common order of x. For
// uniform type-(3,2,7) input the handles must share k and the signature
// additivity bookkeeping is asserted; otherwise (modular-group style input
// with equal x- and y-orders) the join is built and the type recomputed
// honestly.
Dessin x_join(const std::vector<std::pair<Dessin, Handle>>& parts);

// Covering behaviour of handles: every handle of the cover projects to a
// handle of the base with the same k, and over handle points where the
// covering is unbranched, base handles lift to sheet-many disjoint cover
// handles.
bool handle_projection_check(const Dessin& cover, const Dessin& base,
                             const std::vector<int>& phi);

}  // namespace dessin
