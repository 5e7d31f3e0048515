#include "wcut/triangle.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>
#include <vector>

#include "boundary.hpp"

namespace wcut {

Triangle make_triangle(double a, double b, double c) {
  const double in[3] = {a, b, c};
  for (int i = 0; i < 3; ++i) {
    if (!(in[i] > 0.0)) {  // also rejects NaN
      std::ostringstream msg;
      msg << "side " << i + 1 << " must be positive, got " << in[i];
      throw NonPositiveSide(msg.str());
    }
  }

  std::array<std::pair<double, int>, 3> sides{{{a, 0}, {b, 1}, {c, 2}}};
  std::stable_sort(sides.begin(), sides.end(),
                   [](const auto& l, const auto& r) { return l.first > r.first; });

  Triangle t;
  t.a = sides[0].first;
  t.b = sides[1].first;
  t.c = sides[2].first;
  t.s = (t.a + t.b + t.c) / 2.0;
  t.input_order = {sides[0].second, sides[1].second, sides[2].second};

  // With a >= b >= c the tightest inequality is a < b + c.
  const double slack = t.b + t.c - t.a;
  if (slack <= 1e-12 * (2.0 * t.s)) {
    std::ostringstream msg;
    msg << "triangle inequality violated: a=" << t.a << " >= b+c=" << t.b + t.c
        << " (slack " << slack << ")";
    throw TriangleInequalityViolated(msg.str(), slack);
  }
  t.near_degenerate = slack / (2.0 * t.s) < 1e-6;
  return t;
}

double EmbeddedTriangle::param_toward_next(Vertex v, double d) const {
  double t;
  switch (v) {
    case Vertex::A: t = tri.a + tri.b + d; break;  // along A -> B
    case Vertex::B: t = d; break;                  // along B -> C
    default: t = tri.a + d; break;                 // along C -> A
  }
  if (t >= perimeter) t -= perimeter;
  return t;
}

double EmbeddedTriangle::param_toward_prev(Vertex v, double d) const {
  double t;
  switch (v) {
    case Vertex::A: t = tri.a + tri.b - d; break;  // along A -> C
    case Vertex::B: t = perimeter - d; break;      // along B -> A
    default: t = tri.a - d; break;                 // along C -> B
  }
  if (t >= perimeter) t -= perimeter;
  if (t < 0.0) t += perimeter;
  return t;
}

Vec2 EmbeddedTriangle::point_at(double t) const {
  t = std::fmod(t, perimeter);
  if (t < 0.0) t += perimeter;
  if (t < tri.a) return lerp(B, C, t / tri.a);
  t -= tri.a;
  if (t < tri.b) return lerp(C, A, t / tri.b);
  t -= tri.b;
  return lerp(A, B, t / tri.c);
}

bool EmbeddedTriangle::contains(Vec2 p) const {
  return cross(C - B, p - B) > 0.0 && cross(A - C, p - C) > 0.0 &&
         cross(B - A, p - A) > 0.0;
}

double EmbeddedTriangle::area() const {
  return 0.5 * std::abs(cross(C - B, A - B));
}

EmbeddedTriangle embed(const Triangle& t) {
  const double a = t.a, b = t.b, c = t.c;
  EmbeddedTriangle e;
  e.tri = t;
  e.perimeter = 2.0 * t.s;
  e.B = {0.0, 0.0};
  e.C = {a, 0.0};
  const double ax = ((a - b) * (a + b) + c * c) / (2.0 * a);
  // Height via the numerically stable Heron product (sides sorted a>=b>=c).
  const double prod =
      (a + (b + c)) * (c - (a - b)) * (c + (a - b)) * (a + (b - c));
  const double ay = std::sqrt(std::max(prod, 0.0)) / (2.0 * a);
  e.A = {ax, ay};
  e.boundary_verts = {e.B, e.C, e.A};
  e.boundary_params = {0.0, a, a + b};
  return e;
}

Vec2 centroid(const EmbeddedTriangle& e) {
  return (e.A + e.B + e.C) / 3.0;
}

ObliqueCoords oblique_coords(const EmbeddedTriangle& e, Vertex v, Vec2 p) {
  if (!e.contains(p)) throw NotInterior("oblique_coords: point not strictly interior");
  const Vec2 origin = e.vertex(v);
  const Vec2 u = normalized(e.vertex(next_vertex(v)) - origin);
  const Vec2 w = normalized(e.vertex(prev_vertex(v)) - origin);
  const double det = cross(u, w);
  if (std::abs(det) < 1e-14)
    throw SingularFrame("oblique_coords: side frame is singular");
  const Vec2 r = p - origin;
  return {cross(r, w) / det, cross(u, r) / det};
}

CutPieces cut_at_angle(const EmbeddedTriangle& e, Vec2 p, double theta) {
  if (!e.contains(p)) throw NotInterior("cut_at_angle: point not strictly interior");
  theta = fold_angle(theta);
  const Vec2 dir{std::cos(theta), std::sin(theta)};
  const auto cut = detail::boundary_cut(e.boundary_verts, e.boundary_params,
                                        e.perimeter, p, dir);
  CutPieces out;
  out.chord = {cut.lo.t, cut.hi.t, cut.lo.q, cut.hi.q, theta};
  const double piece = cut.hi.t - cut.lo.t;
  out.piece_min = std::min(piece, e.perimeter - piece);
  out.piece_max = std::max(piece, e.perimeter - piece);
  return out;
}

namespace {

double shoelace(const std::vector<Vec2>& poly) {
  double sum = 0.0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const std::size_t j = (i + 1 == poly.size()) ? 0 : i + 1;
    sum += cross(poly[i], poly[j]);
  }
  return 0.5 * std::abs(sum);
}

}  // namespace

AreaPieces area_cut_at_angle(const EmbeddedTriangle& e, Vec2 p, double theta) {
  const CutPieces cp = cut_at_angle(e, p, theta);
  const double t1 = cp.chord.t1, t2 = cp.chord.t2;

  // Vertices strictly inside (t1, t2) belong to the first piece; the rest,
  // taken in traversal order wrapping past the origin, to the second.
  std::vector<Vec2> piece1{cp.chord.p1};
  for (int i = 0; i < 3; ++i) {
    const double tv = e.boundary_params[i];
    if (tv > t1 && tv < t2) piece1.push_back(e.boundary_verts[i]);
  }
  piece1.push_back(cp.chord.p2);

  std::vector<Vec2> piece2{cp.chord.p2};
  for (int i = 0; i < 3; ++i) {
    const double tv = e.boundary_params[i];
    if (tv > t2) piece2.push_back(e.boundary_verts[i]);
  }
  for (int i = 0; i < 3; ++i) {
    const double tv = e.boundary_params[i];
    if (tv < t1) piece2.push_back(e.boundary_verts[i]);
  }
  piece2.push_back(cp.chord.p1);

  AreaPieces out;
  out.chord = cp.chord;
  const double a1 = shoelace(piece1);
  const double a2 = shoelace(piece2);
  out.area_min = std::min(a1, a2);
  out.area_max = std::max(a1, a2);
  return out;
}

}  // namespace wcut
