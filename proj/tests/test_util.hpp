#pragma once

#include <random>

#include "smhd/derham_ops.hpp"

namespace smhd::tu {

inline Vector random_vector(Eigen::Index n, std::mt19937& rng) {
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  Vector v(n);
  for (Eigen::Index i = 0; i < n; ++i) v[i] = d(rng);
  return v;
}

/// Random field in the H_0 subspace of `space`.
inline FieldVector random_field(const Space& space, std::mt19937& rng) {
  return FieldVector(space, space.extend(random_vector(static_cast<Eigen::Index>(space.num_free()), rng)));
}

/// Random divergence-free RT field: the curl of a random Nedelec field.
inline FieldVector random_divfree(const OperatorContext& ctx, std::mt19937& rng) {
  return ctx.curl(random_field(ctx.nedelec(), rng));
}

inline double max_abs(const Vector& v) { return v.size() == 0 ? 0.0 : v.cwiseAbs().maxCoeff(); }

inline double max_abs(const SparseMatrix& m) {
  double r = 0.0;
  for (Eigen::Index k = 0; k < m.outerSize(); ++k)
    for (SparseMatrix::InnerIterator it(m, k); it; ++it) r = std::max(r, std::abs(it.value()));
  return r;
}

inline bool bitwise_equal(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols() || a.nonZeros() != b.nonZeros()) return false;
  SparseMatrix ac = a, bc = b;
  ac.makeCompressed();
  bc.makeCompressed();
  for (Eigen::Index i = 0; i <= ac.outerSize(); ++i)
    if (ac.outerIndexPtr()[i] != bc.outerIndexPtr()[i]) return false;
  for (Eigen::Index i = 0; i < ac.nonZeros(); ++i)
    if (ac.innerIndexPtr()[i] != bc.innerIndexPtr()[i] || ac.valuePtr()[i] != bc.valuePtr()[i]) return false;
  return true;
}

}  // namespace smhd::tu
