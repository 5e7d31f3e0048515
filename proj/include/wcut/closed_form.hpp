#pragma once

#include "wcut/triangle.hpp"
#include "wcut/wline.hpp"

namespace wcut {

// Branch of the per-vertex centroid formula: Root is the W-line value
// (p + q + 2*sqrt(p*q))/3, Median the cevian fallback short + long/2.
enum class Branch { Root, Median };

inline const char* branch_name(Branch b) {
  return b == Branch::Root ? "root" : "median";
}

struct VertexCuts {
  double wA = 0.0;
  double wB = 0.0;
  double wC = 0.0;
  Branch branchA = Branch::Root;
  Branch branchB = Branch::Root;
  Branch branchC = Branch::Root;  // always Root: a > 4b cannot happen
};

// Minimal cut toward each vertex for chords through the centroid, from the
// side lengths alone. Requires the canonical ordering a >= b >= c.
VertexCuts vertex_cuts_centroid(const Triangle& t);

enum class CutClass { WLine, Median, BoundaryChord };

inline const char* cut_class_name(CutClass c) {
  switch (c) {
    case CutClass::WLine: return "wline";
    case CutClass::Median: return "median";
    default: return "boundary_chord";
  }
}

struct CutResult {
  double w = 0.0;
  double m = 0.0;  // w / (2s)
  Vertex achieving_vertex = Vertex::A;
  Chord chord;
  CutClass classification = CutClass::WLine;
};

// w = wA for sorted sides; the chord is realized geometrically.
CutResult min_cut_centroid(const Triangle& t);

// w = min(wA, wB, wC) at an arbitrary interior point, evaluating all three
// vertices; ties go to A, then B.
CutResult min_cut_at_point(const EmbeddedTriangle& e, Vec2 p);

// 4(a+b+c)/9 - w; nonnegative, zero only for the equilateral triangle.
double upper_bound_margin(const Triangle& t);

}  // namespace wcut
