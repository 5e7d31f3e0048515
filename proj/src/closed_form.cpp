#include "wcut/closed_form.hpp"

#include <cmath>

namespace wcut {

namespace {

double root_branch(double p, double q) {
  return (p + q + 2.0 * std::sqrt(p * q)) / 3.0;
}

}  // namespace

VertexCuts vertex_cuts_centroid(const Triangle& t) {
  VertexCuts cuts;
  if (t.b <= 4.0 * t.c) {
    cuts.wA = root_branch(t.b, t.c);
    cuts.branchA = Branch::Root;
  } else {
    cuts.wA = t.c + t.b / 2.0;
    cuts.branchA = Branch::Median;
  }
  if (t.a <= 4.0 * t.c) {
    cuts.wB = root_branch(t.a, t.c);
    cuts.branchB = Branch::Root;
  } else {
    cuts.wB = t.c + t.a / 2.0;
    cuts.branchB = Branch::Median;
  }
  cuts.wC = root_branch(t.a, t.b);
  cuts.branchC = Branch::Root;
  return cuts;
}

CutResult min_cut_centroid(const Triangle& t) {
  const VertexCuts cuts = vertex_cuts_centroid(t);
  const EmbeddedTriangle e = embed(t);
  const VertexCut realized = vertex_min_cut(e, Vertex::A, centroid(e));

  CutResult r;
  r.w = cuts.wA;
  r.m = cuts.wA / t.perimeter();
  r.achieving_vertex = Vertex::A;
  r.chord = realized.chord;
  r.classification =
      cuts.branchA == Branch::Root ? CutClass::WLine : CutClass::Median;
  return r;
}

CutResult min_cut_at_point(const EmbeddedTriangle& e, Vec2 p) {
  const VertexCut cutA = vertex_min_cut(e, Vertex::A, p);
  const VertexCut cutB = vertex_min_cut(e, Vertex::B, p);
  const VertexCut cutC = vertex_min_cut(e, Vertex::C, p);

  const VertexCut* best = &cutA;
  if (cutB.value < best->value) best = &cutB;
  if (cutC.value < best->value) best = &cutC;

  CutResult r;
  r.w = best->value;
  r.m = best->value / e.perimeter;
  r.achieving_vertex = best->vertex;
  r.chord = best->chord;
  r.classification = best->kind == CutKind::WLine ? CutClass::WLine
                                                  : CutClass::BoundaryChord;
  return r;
}

double upper_bound_margin(const Triangle& t) {
  return 4.0 * (t.a + t.b + t.c) / 9.0 - vertex_cuts_centroid(t).wA;
}

}  // namespace wcut
