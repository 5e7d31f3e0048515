#pragma once

#include <span>

#include "wcut/vec2.hpp"

namespace wcut::detail {

struct BoundaryHit {
  double t = 0.0;
  Vec2 q;
};

struct BoundaryCut {
  BoundaryHit lo;  // lo.t < hi.t
  BoundaryHit hi;
};

// Crossings of the line through p with direction dir (|dir| = 1) against a
// strictly convex counterclockwise boundary. verts[i] sits at arc parameter
// params[i]; the closing edge returns to verts[0] at parameter `perimeter`.
// p must be strictly interior, which guarantees exactly two crossings.
// A vertex within 1e-13 * perimeter of the line counts as a crossing at the
// vertex's own parameter, and its adjacent edges are not tested.
BoundaryCut boundary_cut(std::span<const Vec2> verts,
                         std::span<const double> params, double perimeter,
                         Vec2 p, Vec2 dir);

}  // namespace wcut::detail
