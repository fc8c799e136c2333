#pragma once

#include <limits>
#include <memory>
#include <optional>
#include <vector>

#include "smhd/derham_ops.hpp"

namespace smhd {

/// Physical parameters, stored as inverse Reynolds numbers so that the ideal
/// limit Re = Rm = infinity is exactly representable as zero.
struct PhysParams {
  double inv_re = 1.0;
  double inv_rm = 1.0;
  double sc = 1.0;  ///< coupling number
  double mu = 1.0;  ///< permeability

  /// Re or Rm may be +infinity.
  static PhysParams from_reynolds(double re, double rm, double sc = 1.0, double mu = 1.0);
  static PhysParams ideal(double sc = 1.0, double mu = 1.0) { return {0.0, 0.0, sc, mu}; }

  bool is_ideal() const { return inv_re == 0.0 && inv_rm == 0.0; }
  /// Throws InvalidArgument unless inv_re, inv_rm in [0, inf), sc > 0, mu > 0.
  void validate() const;
};

/// The seven discrete fields at one time level. u, omega, j, E, H are
/// Nedelec, B is Raviart-Thomas and P is Lagrange, all in the H_0 subspaces.
struct MhdState {
  double t = 0.0;
  PhysParams params;
  FieldVector u, omega, j, E, H, B, P;
};

/// Forcing of the momentum equation and an optional divergence-free forcing
/// of Faraday's law (used by manufactured solutions only). The Faraday
/// forcing is given through a potential Psi with g_B = curl Psi, so that its
/// interpolant is exactly divergence free.
struct SourceTerms {
  std::optional<AnalyticField> f;
  std::optional<AnalyticField> faraday_potential;
};

enum class NonlinearScheme { Picard, Newton, PicardThenNewton };

struct SolverOptions {
  double tol = 1e-12;
  int max_iterations = 50;
  NonlinearScheme scheme = NonlinearScheme::PicardThenNewton;
  /// PicardThenNewton switches to Newton once the residual drops below this.
  double newton_switch = 1e-4;
  /// Keep the factorised Jacobian across iterations and steps and refresh it
  /// only when an iteration contracts the residual by less than
  /// `max_contraction`. The converged solution meets the same tolerance.
  bool reuse_jacobian = true;
  double max_contraction = 0.25;
  Exec exec = Exec::Parallel;
};

/// Fields at the half step t + dt/2: u and B are midpoint averages, the
/// auxiliary fields are the unknowns of the algebraic equations.
struct MidpointFields {
  double t = 0.0;
  FieldVector u, omega, j, E, H, B, P;
};

struct NonlinearReport {
  bool converged = false;
  int iterations = 0;
  std::vector<double> residuals;  ///< max-norm residual before each update and at exit
  std::vector<bool> newton;       ///< whether iteration i used the Newton Jacobian
  int factorizations = 0;
};

struct StepResult {
  MhdState state;   ///< end-of-step state; auxiliaries recovered at t + dt
  MidpointFields mid;
  NonlinearReport report;
  Vector momentum_load;  ///< (f(t + dt/2), v_i), free Nedelec numbering
  Vector faraday_load;   ///< RT coefficients of g_B(t + dt/2), free numbering
};

/// L^2 norms of the defects of the identities linking the auxiliary fields
/// to u and B.
struct ConsistencyReport {
  double ohm = 0.0;          ///< E - (Rm^-1 j - Q(u x mu H))
  double vorticity = 0.0;    ///< omega - Q curl u
  double ampere = 0.0;       ///< mu j - curl_h B
  double constitutive = 0.0; ///< mu H - Q B
  double explicit_current = std::numeric_limits<double>::quiet_NaN();  ///< j - Rm (E + Q(u x Q B)); NaN when Rm = inf
  double divergence = 0.0;   ///< max |D2 B|

  double max() const;
};

/// Implicit-midpoint integrator for the seven-field scheme. Each step solves
/// the coupled nonlinear system for (u^{n+1}, omega, j, E, H, B^{n+1}, P)
/// with boundary DOFs eliminated.
///
/// A solver caches its Jacobian factorisation between steps, so one instance
/// must not step two states concurrently.
class MhdSolver {
 public:
  MhdSolver(const OperatorContext& ctx, PhysParams params, SolverOptions options = {});
  ~MhdSolver();
  MhdSolver(MhdSolver&&) noexcept;
  MhdSolver& operator=(MhdSolver&&) noexcept;

  const OperatorContext& context() const { return *ctx_; }
  const PhysParams& params() const { return params_; }
  const SolverOptions& options() const { return options_; }

  /// u_h^0 from the Nedelec interpolant (made discretely divergence free),
  /// B_h^0 = pi_tilde_rt(B0); auxiliaries from the strong identities.
  /// Throws DivergenceError when B0 is not divergence free.
  MhdState init_state(const AnalyticField& u0, const AnalyticField& b0, const SourceTerms& sources = {},
                      double t0 = 0.0) const;
  MhdState zero_state(double t0 = 0.0) const;
  /// Auxiliary fields of (u, B) at time t from the strong identities and a
  /// pressure solve.
  MhdState recover(const FieldVector& u, const FieldVector& b, double t, const SourceTerms& sources = {}) const;

  StepResult step_midpoint(const MhdState& state, double dt, const SourceTerms& sources = {}) const;
  StepResult solve_nonlinear(const MhdState& state, double dt, double tol, NonlinearScheme scheme,
                             const SourceTerms& sources = {}) const;

  /// Residual of the seven midpoint equations for a candidate half-step.
  Vector midpoint_residual(const MhdState& prev, const MhdState& next, const MidpointFields& mid, double dt,
                           const SourceTerms& sources = {}) const;

  ConsistencyReport reduced_consistency_check(const MhdState& state) const;

  Vector momentum_load(const SourceTerms& sources, double t) const;
  Vector faraday_load(const SourceTerms& sources, double t) const;

 private:
  Vector residual(const Vector& x, const Vector& u0, const Vector& b0, double dt, const Vector& f, const Vector& g) const;
  SparseMatrix jacobian(const Vector& x, const Vector& u0, double dt, bool newton) const;
  Vector cross(const Vector& a, const Vector& b) const;  // (a x b, w_i), free Nedelec numbering

  struct JacobianCache;

  const OperatorContext* ctx_;
  std::unique_ptr<JacobianCache> cache_;
  PhysParams params_;
  SolverOptions options_;
  Eigen::Index nn_, nr_, nl_;
  SparseMatrix curl_full_;  // free RT rows x all edges
};

}  // namespace smhd
