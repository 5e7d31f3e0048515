#pragma once

#include <utility>

#include "wcut/triangle.hpp"

namespace wcut {

// Chord through P = x*u + y*v minimizing the length cut off a wedge with
// unit side directions u, v. Endpoints sit at s along u and t along v.
struct WLineSolution {
  double s = 0.0;
  double t = 0.0;
  double cut = 0.0;  // s + t = (sqrt(x) + sqrt(y))^2
};

WLineSolution wline_extreme(double x, double y);

// Numeric reference for wline_extreme: minimizes s + t on the constraint
// x/s + y/t = 1 by a grid over (x, x*bracket_factor] followed by golden
// section refinement. Shares no formulas with wline_extreme. n >= 100.
std::pair<double, double> lagrange_oracle(double x, double y, int n,
                                          double bracket_factor = 1000.0);

enum class CutKind {
  WLine,
  BoundaryChordLeft,   // through the far endpoint of the side toward next
  BoundaryChordRight,  // through the far endpoint of the side toward prev
};

struct VertexCut {
  Vertex vertex = Vertex::A;
  double value = 0.0;
  CutKind kind = CutKind::WLine;
  Chord chord;
};

// Minimum boundary length cut off toward vertex v over all chords through p
// crossing both sides adjacent to v. The W-line value when its endpoints fit
// within the closed sides; otherwise the smaller of the two chords through p
// and a far side endpoint. Ties at the feasibility boundary go to WLine.
VertexCut vertex_min_cut(const EmbeddedTriangle& e, Vertex v, Vec2 p);

}  // namespace wcut
