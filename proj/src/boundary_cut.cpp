#include "boundary.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace wcut::detail {

BoundaryCut boundary_cut(std::span<const Vec2> verts,
                         std::span<const double> params, double perimeter,
                         Vec2 p, Vec2 dir) {
  const std::size_t n = verts.size();
  const double hit_tol = 1e-13 * perimeter;

  constexpr std::size_t kStack = 32;
  double side_stack[kStack];
  std::vector<double> side_heap;
  double* side = side_stack;
  if (n > kStack) {
    side_heap.resize(n);
    side = side_heap.data();
  }

  for (std::size_t i = 0; i < n; ++i) side[i] = cross(dir, verts[i] - p);

  BoundaryHit hits[3];
  int nhits = 0;
  auto add = [&](double t, Vec2 q) {
    if (nhits < 3) hits[nhits] = {t, q};
    ++nhits;
  };

  for (std::size_t i = 0; i < n; ++i) {
    if (std::abs(side[i]) <= hit_tol) add(params[i], verts[i]);
  }
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = (i + 1 == n) ? 0 : i + 1;
    if (std::abs(side[i]) <= hit_tol || std::abs(side[j]) <= hit_tol) continue;
    if (side[i] * side[j] < 0.0) {
      const double u = side[i] / (side[i] - side[j]);
      const double t_end = (j == 0) ? perimeter : params[j];
      add(params[i] + u * (t_end - params[i]), lerp(verts[i], verts[j], u));
    }
  }

  if (nhits != 2)
    throw std::logic_error("boundary_cut: expected exactly 2 crossings, got " +
                           std::to_string(nhits));

  if (hits[0].t > hits[1].t) std::swap(hits[0], hits[1]);
  return {hits[0], hits[1]};
}

}  // namespace wcut::detail
