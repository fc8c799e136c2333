#pragma once

#include <cstdint>
#include <vector>

#include "smhd/assembly.hpp"
#include "smhd/fem_spaces.hpp"
#include "smhd/linear_solver.hpp"
#include "smhd/mesh.hpp"

namespace smhd {

/// Optional re-orientation of edges and faces (+1/-1 per entity). Empty
/// vectors mean the canonical ascending-index orientation.
struct Orientation {
  std::vector<std::int8_t> edge_signs;
  std::vector<std::int8_t> face_signs;
};

/// Result of the curl-preserving projection: the projected field and the
/// Lagrange multiplier of its gradient constraint (zero in exact arithmetic).
struct PiNResult {
  FieldVector field;
  FieldVector multiplier;
};

/// Gauge condition for vector potentials: L^2-orthogonal to discrete
/// gradients (default) or orthogonal in the Euclidean coefficient inner
/// product. Both give curl A_h = B_h.
enum class Gauge { MassOrthogonal, CoefficientOrthogonal };

/// The discrete spaces of the complex on one mesh together with their
/// assembled, boundary-reduced matrices and factorisations.
///
/// All "free" matrices act on the H_0 numbering of Space::free_dofs(). The
/// curl, gradient and divergence matrices are the signed incidence matrices,
/// which at k = 0 map Whitney coefficients exactly. Immutable after
/// construction; const methods are safe to call concurrently.
class OperatorContext {
 public:
  explicit OperatorContext(const TetMesh& mesh, int order = 0, Orientation orientation = {},
                           Exec exec = Exec::Parallel);

  OperatorContext(const OperatorContext&) = delete;
  OperatorContext& operator=(const OperatorContext&) = delete;

  const TetMesh& mesh() const { return *mesh_; }
  int order() const { return order_; }
  const Space& lagrange() const { return lagrange_; }
  const Space& nedelec() const { return nedelec_; }
  const Space& rt() const { return rt_; }
  const Space& dg() const { return dg_; }

  // Boundary-reduced matrices.
  const SparseMatrix& mass_lagrange() const { return ml_; }
  const SparseMatrix& mass_nedelec() const { return mn_; }
  const SparseMatrix& mass_rt() const { return mr_; }
  /// (w_f, w_e): Nedelec x RT, so (u, B) = u^T X B.
  const SparseMatrix& mixed_mass() const { return x_; }
  const SparseMatrix& curl_curl() const { return a_; }
  const SparseMatrix& stiffness_lagrange() const { return kl_; }
  /// Coefficient gradient (free Nedelec x free Lagrange).
  const SparseMatrix& grad() const { return g_; }
  /// Coefficient curl (free RT x free Nedelec).
  const SparseMatrix& curl() const { return c_; }
  /// Cell outward flux sums (cells x free RT).
  const SparseMatrix& flux_div() const { return d_; }

  Vector solve_mass_nedelec(const Vector& rhs) const { return mn_solver_.solve(rhs); }
  Vector solve_mass_rt(const Vector& rhs) const { return mr_solver_.solve(rhs); }
  Vector solve_stiffness_lagrange(const Vector& rhs) const { return kl_solver_.solve(rhs); }

  Vector free(const FieldVector& f) const { return f.space->restrict(f.coeffs); }
  FieldVector from_free(const Space& s, const Vector& v) const { return FieldVector(s, s.extend(v)); }

  /// L^2 projection Q_h onto H_0^h(curl).
  FieldVector q_h_project(const AnalyticField& v, double t = 0.0) const;
  /// Q_h of a discrete Nedelec or Raviart-Thomas field.
  FieldVector q_h_project(const FieldVector& v) const;
  /// Discrete curl: (curl_h B, v) = (B, curl v) for all v in H_0^h(curl).
  FieldVector curl_h(const FieldVector& b) const;
  /// Curl-preserving projection onto H_0^h(curl) (mixed form with a
  /// Lagrange multiplier on gradients).
  PiNResult pi_n(const AnalyticField& e, double t = 0.0) const;
  PiNResult pi_n(const FieldVector& e) const;
  /// L^2 projection onto divergence-free H_0^h(div).
  FieldVector pi_tilde_rt(const AnalyticField& b, double t = 0.0) const;
  FieldVector pi_tilde_rt(const FieldVector& b) const;
  /// A_h in H_0^h(curl) with curl A_h = B_h. Throws DivergenceError when
  /// max |D2 B_h| exceeds 1e-10.
  FieldVector vector_potential(const FieldVector& b, Gauge gauge = Gauge::MassOrthogonal) const;
  /// ||pi_tilde_rt(curl E) - curl pi_n(E)||_{L^2}; needs e.curl.
  double commuting_check(const AnalyticField& e, double t = 0.0) const;

  FieldVector grad(const FieldVector& p) const;
  FieldVector curl(const FieldVector& v) const;
  /// Per-cell outward flux sums D2 * B (integer incidence, no scaling).
  Vector flux_divergence(const FieldVector& b) const;
  /// max over cells of |D2 * B|.
  double divergence_norm(const FieldVector& b) const;

  double inner(const FieldVector& a, const FieldVector& b) const;
  double l2_norm(const FieldVector& a) const;

 private:
  Vector saddle_solve(const SparseLu& lu, const Vector& top, const Vector& bottom, Vector* multiplier) const;

  const TetMesh* mesh_;
  int order_;
  Space lagrange_, nedelec_, rt_, dg_;
  SparseMatrix ml_, mn_, mr_, x_, a_, kl_, g_, c_, d_;
  SparseCholesky mn_solver_, mr_solver_, kl_solver_;
  SparseLu curl_saddle_;        // [A, Mn G; G^T Mn, 0]
  SparseLu curl_saddle_plain_;  // [A, G; G^T, 0]
  SparseLu div_saddle_;         // [Mr, D^T; D, 0], one cell pinned
};

}  // namespace smhd
