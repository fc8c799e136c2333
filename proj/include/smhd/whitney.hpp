#pragma once

// Lowest-order Whitney forms on one cell, written directly in physical
// coordinates from the barycentric gradients. Local numbering follows
// TetMesh: vertices sorted ascending, edges (0,1),(0,2),(0,3),(1,2),(1,3),(2,3),
// face i opposite sorted vertex i. Signs of shared entities are applied by the
// caller.

#include <array>

#include "smhd/mesh.hpp"

namespace smhd::whitney {

inline constexpr std::array<std::array<int, 2>, 6> kEdges = {{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
inline constexpr std::array<std::array<int, 3>, 4> kFaces = {{{1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}}};

using Bary = std::array<double, 4>;

inline Bary barycentric(const Vec3& ref) {
  return {1.0 - ref.x() - ref.y() - ref.z(), ref.x(), ref.y(), ref.z()};
}

inline void edge_values(const CellGeometry& g, const Bary& l, std::array<Vec3, 6>& out) {
  for (int e = 0; e < 6; ++e) {
    const int a = kEdges[e][0], b = kEdges[e][1];
    out[e] = l[a] * g.grad_lambda[b] - l[b] * g.grad_lambda[a];
  }
}

inline void edge_curls(const CellGeometry& g, std::array<Vec3, 6>& out) {
  for (int e = 0; e < 6; ++e) {
    const int a = kEdges[e][0], b = kEdges[e][1];
    out[e] = 2.0 * g.grad_lambda[a].cross(g.grad_lambda[b]);
  }
}

inline void face_values(const CellGeometry& g, const Bary& l, std::array<Vec3, 4>& out) {
  for (int f = 0; f < 4; ++f) {
    const int a = kFaces[f][0], b = kFaces[f][1], c = kFaces[f][2];
    const auto& ga = g.grad_lambda[a];
    const auto& gb = g.grad_lambda[b];
    const auto& gc = g.grad_lambda[c];
    out[f] = 2.0 * (l[a] * gb.cross(gc) + l[b] * gc.cross(ga) + l[c] * ga.cross(gb));
  }
}

inline void face_divs(const CellGeometry& g, std::array<double, 4>& out) {
  for (int f = 0; f < 4; ++f) {
    const int a = kFaces[f][0], b = kFaces[f][1], c = kFaces[f][2];
    out[f] = 6.0 * g.grad_lambda[a].dot(g.grad_lambda[b].cross(g.grad_lambda[c]));
  }
}

}  // namespace smhd::whitney
