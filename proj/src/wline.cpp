#include "wcut/wline.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace wcut {

WLineSolution wline_extreme(double x, double y) {
  if (!(x > 0.0) || !(y > 0.0)) {
    std::ostringstream msg;
    msg << "wline_extreme: inputs must be positive, got (" << x << ", " << y << ")";
    throw NonPositiveInput(msg.str());
  }
  const double r = std::sqrt(x * y);
  return {x + r, y + r, x + y + 2.0 * r};
}

std::pair<double, double> lagrange_oracle(double x, double y, int n,
                                          double bracket_factor) {
  if (!(x > 0.0) || !(y > 0.0)) {
    std::ostringstream msg;
    msg << "lagrange_oracle: inputs must be positive, got (" << x << ", " << y << ")";
    throw NonPositiveInput(msg.str());
  }
  if (n < 100) n = 100;

  // Extended precision keeps the flat-minimum resolution below 1e-9
  // relative in s itself, not just in the objective.
  const long double lx = x, ly = y;
  const auto objective = [&](long double s) { return s + ly * s / (s - lx); };

  const long double lo = lx;
  const long double hi = lx * static_cast<long double>(bracket_factor);
  int best = 1;
  long double best_val = objective(lo + (hi - lo) / n);
  for (int i = 2; i <= n; ++i) {
    const long double v = objective(lo + (hi - lo) * i / n);
    if (v < best_val) {
      best_val = v;
      best = i;
    }
  }

  long double a = lo + (hi - lo) * (best - 1) / n;
  long double b = lo + (hi - lo) * std::min(best + 1, n) / n;
  const long double invphi = 0.6180339887498948482L;
  long double c = b - invphi * (b - a);
  long double d = a + invphi * (b - a);
  long double fc = objective(c);
  long double fd = objective(d);
  while (b - a > 1e-16L * (std::abs(a) + std::abs(b))) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - invphi * (b - a);
      fc = objective(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + invphi * (b - a);
      fd = objective(d);
    }
  }
  const long double s_min = (a + b) / 2.0L;
  const long double t_min = ly * s_min / (s_min - lx);
  return {static_cast<double>(s_min), static_cast<double>(t_min)};
}

namespace {

Chord chord_between(double ta, Vec2 pa, double tb, Vec2 pb) {
  Chord ch;
  if (ta <= tb) {
    ch.t1 = ta;
    ch.t2 = tb;
    ch.p1 = pa;
    ch.p2 = pb;
  } else {
    ch.t1 = tb;
    ch.t2 = ta;
    ch.p1 = pb;
    ch.p2 = pa;
  }
  const Vec2 d = ch.p2 - ch.p1;
  ch.theta = fold_angle(std::atan2(d.y, d.x));
  return ch;
}

}  // namespace

VertexCut vertex_min_cut(const EmbeddedTriangle& e, Vertex v, Vec2 p) {
  const ObliqueCoords ob = oblique_coords(e, v, p);  // checks interiority
  const Vec2 origin = e.vertex(v);
  const Vec2 far_next = e.vertex(next_vertex(v));
  const Vec2 far_prev = e.vertex(prev_vertex(v));
  const double len_next = e.side_toward_next(v);
  const double len_prev = e.side_toward_prev(v);
  const Vec2 u = (far_next - origin) / len_next;
  const Vec2 w = (far_prev - origin) / len_prev;

  const double r = std::sqrt(ob.x * ob.y);
  const double su = ob.x + r;
  const double tw = ob.y + r;

  const double tol = 1.0 + 1e-12;  // closed sides; boundary ties stay WLine
  if (su <= len_next * tol && tw <= len_prev * tol) {
    const double du = std::min(su, len_next);
    const double dw = std::min(tw, len_prev);
    const Chord ch = chord_between(e.param_toward_next(v, du), origin + du * u,
                                   e.param_toward_prev(v, dw), origin + dw * w);
    return {v, ob.x + ob.y + 2.0 * r, CutKind::WLine, ch};
  }

  // W-line leaves the triangle: the minimum over the feasible chord family
  // is at one of the chords through p and a far side endpoint. The chord
  // through far_next crosses the prev side at fraction q of its length.
  const auto side_fraction = [&p](Vec2 far, Vec2 from, Vec2 to) {
    return cross(p - far, far - from) / cross(p - far, to - from);
  };
  const double q_prev = side_fraction(far_next, origin, far_prev);
  const double q_next = side_fraction(far_prev, origin, far_next);
  const double value_left = len_next + q_prev * len_prev;
  const double value_right = len_prev + q_next * len_next;

  if (value_left <= value_right) {
    const Chord ch = chord_between(e.vertex_param(next_vertex(v)), far_next,
                                   e.param_toward_prev(v, q_prev * len_prev),
                                   lerp(origin, far_prev, q_prev));
    return {v, value_left, CutKind::BoundaryChordLeft, ch};
  }
  const Chord ch = chord_between(e.vertex_param(prev_vertex(v)), far_prev,
                                 e.param_toward_next(v, q_next * len_next),
                                 lerp(origin, far_next, q_next));
  return {v, value_right, CutKind::BoundaryChordRight, ch};
}

}  // namespace wcut
