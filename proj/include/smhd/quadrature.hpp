#pragma once

#include <vector>

#include "smhd/types.hpp"

namespace smhd {

/// Quadrature on a reference simplex (segment [0,1], triangle or
/// tetrahedron with vertices at the origin and the unit vectors).
struct QuadratureRule {
  std::vector<Vec3> points;  ///< reference coordinates (unused components zero)
  std::vector<double> weights;
  int degree = 0;            ///< exact for polynomials of total degree <= degree

  std::size_t size() const { return points.size(); }
};

/// Gauss-Jacobi nodes/weights on [0,1] for the weight (1-x)^alpha.
void gauss_jacobi01(int m, int alpha, std::vector<double>& nodes, std::vector<double>& weights);

/// Conical-product (Stroud) rule on the reference tetrahedron. Weights sum to 1/6.
QuadratureRule tet_rule(int degree);
/// Conical-product rule on the reference triangle. Weights sum to 1/2.
QuadratureRule triangle_rule(int degree);
/// Gauss-Legendre rule on [0,1]. Weights sum to 1.
QuadratureRule segment_rule(int degree);

/// Rule degree used for assembling the forms of the scheme at order k.
inline int assembly_degree(int k) { return 4 + 3 * k; }

}  // namespace smhd
