#pragma once

#include <array>

#include "wcut/errors.hpp"
#include "wcut/vec2.hpp"

namespace wcut {

enum class Vertex { A, B, C };

inline Vertex next_vertex(Vertex v) {
  switch (v) {
    case Vertex::A: return Vertex::B;
    case Vertex::B: return Vertex::C;
    default: return Vertex::A;
  }
}

inline Vertex prev_vertex(Vertex v) {
  switch (v) {
    case Vertex::A: return Vertex::C;
    case Vertex::B: return Vertex::A;
    default: return Vertex::B;
  }
}

inline const char* vertex_name(Vertex v) {
  switch (v) {
    case Vertex::A: return "A";
    case Vertex::B: return "B";
    default: return "C";
  }
}

// Side lengths in canonical order a >= b >= c with a = BC, b = CA, c = AB.
struct Triangle {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double s = 0.0;  // semiperimeter, (a + b + c) / 2 as stored
  // input_order[i] = zero-based index of the caller's side that became
  // canonical side i (0 = a, 1 = b, 2 = c); ties resolved stably.
  std::array<int, 3> input_order{0, 1, 2};
  // Set when min(b+c-a, a+c-b, a+b-c) / (2s) < 1e-6. Such triangles are
  // accepted; the extremal shapes live near the degenerate boundary.
  bool near_degenerate = false;

  double perimeter() const { return 2.0 * s; }
};

// Sorts the sides descending and validates positivity and the strict
// triangle inequality (relative slack 1e-12).
Triangle make_triangle(double a, double b, double c);

struct Chord {
  double t1 = 0.0;  // boundary arc parameters of the crossings, t1 < t2
  double t2 = 0.0;
  Vec2 p1;
  Vec2 p2;
  double theta = 0.0;  // inclination in [0, pi)
};

// Canonical planar realization: B = (0,0), C = (a,0), A in the upper half
// plane. The boundary parameter t in [0, 2s) starts at B and traverses
// B -> C -> A -> B by arc length.
struct EmbeddedTriangle {
  Triangle tri;
  Vec2 A, B, C;
  double perimeter = 0.0;

  // Boundary traversal caches, in order B, C, A.
  std::array<Vec2, 3> boundary_verts{};
  std::array<double, 3> boundary_params{};

  Vec2 vertex(Vertex v) const {
    switch (v) {
      case Vertex::A: return A;
      case Vertex::B: return B;
      default: return C;
    }
  }

  double vertex_param(Vertex v) const {
    switch (v) {
      case Vertex::A: return tri.a + tri.b;
      case Vertex::B: return 0.0;
      default: return tri.a;
    }
  }

  // Lengths of the two sides adjacent to v: toward the next vertex
  // (A->B, B->C, C->A) and toward the previous one (A->C, B->A, C->B).
  double side_toward_next(Vertex v) const {
    switch (v) {
      case Vertex::A: return tri.c;
      case Vertex::B: return tri.a;
      default: return tri.b;
    }
  }
  double side_toward_prev(Vertex v) const {
    switch (v) {
      case Vertex::A: return tri.b;
      case Vertex::B: return tri.c;
      default: return tri.a;
    }
  }

  // Boundary parameter of the point at distance d from v along the side
  // toward the next/previous vertex. Results wrapped into [0, 2s).
  double param_toward_next(Vertex v, double d) const;
  double param_toward_prev(Vertex v, double d) const;

  Vec2 point_at(double t) const;
  bool contains(Vec2 p) const;  // strict interior
  double area() const;
};

EmbeddedTriangle embed(const Triangle& t);

Vec2 centroid(const EmbeddedTriangle& e);

// Coordinates of p in the frame of unit vectors along the two sides leaving
// the vertex: x along v -> next, y along v -> prev. Both positive for
// interior points.
struct ObliqueCoords {
  double x = 0.0;
  double y = 0.0;
};

ObliqueCoords oblique_coords(const EmbeddedTriangle& e, Vertex v, Vec2 p);

struct CutPieces {
  Chord chord;
  double piece_min = 0.0;
  double piece_max = 0.0;
};

// Splits the boundary with the line through p at inclination theta.
// piece_min + piece_max = 2s. A chord through a vertex is a regular
// crossing at the vertex's parameter.
CutPieces cut_at_angle(const EmbeddedTriangle& e, Vec2 p, double theta);

struct AreaPieces {
  Chord chord;
  double area_min = 0.0;
  double area_max = 0.0;
};

AreaPieces area_cut_at_angle(const EmbeddedTriangle& e, Vec2 p, double theta);

}  // namespace wcut
