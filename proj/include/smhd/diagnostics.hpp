#pragma once

#include <iosfwd>
#include <vector>

#include "smhd/mhd_solver.hpp"

namespace smhd {

/// E = 1/2 ||u||^2 + s/(2 mu) ||B||^2.
double energy(const OperatorContext& ctx, const PhysParams& params, const FieldVector& u, const FieldVector& b);
inline double energy(const OperatorContext& ctx, const MhdState& s) { return energy(ctx, s.params, s.u, s.B); }

/// (A_h, B_h) with curl A_h = B_h in the given gauge. Throws DivergenceError
/// if B_h is not divergence free.
double magnetic_helicity(const OperatorContext& ctx, const FieldVector& b, Gauge gauge = Gauge::MassOrthogonal);
/// (u_h, B_h).
double cross_helicity(const OperatorContext& ctx, const FieldVector& u, const FieldVector& b);

/// Discrete balance laws over one midpoint step. Each residual is the
/// defect of "rate = sources - dissipation", divided by the largest term
/// magnitude or the size of the balanced quantity, whichever is larger. The
/// size of a helicity (a, B) is taken as max(|(a, B)|, ||a|| ||B||).
struct StepBalance {
  double energy_rate = 0.0;
  double viscous_dissipation = 0.0;  ///< Re^-1 ||curl u_m||^2
  double ohmic_dissipation = 0.0;    ///< s Rm^-1 ||j_m||^2
  double work = 0.0;                 ///< (f, u_m) + s/mu (g_B, B_m)
  double energy_residual = 0.0;

  double magnetic_helicity_rate = 0.0;
  double magnetic_helicity_source = 0.0;  ///< predicted rate
  double helicity_rate_residual_m = 0.0;

  double cross_helicity_rate = 0.0;
  double cross_helicity_source = 0.0;  ///< predicted rate
  double helicity_rate_residual_c = 0.0;
};

StepBalance step_balance(const MhdSolver& solver, const MhdState& prev, const StepResult& step, double dt);

/// One line of the per-step diagnostics table.
struct DiagnosticsRow {
  int step = 0;
  double t = 0.0;
  double energy = 0.0;
  double viscous_dissipation = 0.0;
  double ohmic_dissipation = 0.0;
  double work = 0.0;
  double magnetic_helicity = 0.0;
  double cross_helicity = 0.0;
  double div_B_max = 0.0;
  double energy_residual = 0.0;
  double helicity_rate_residual_m = 0.0;
  double helicity_rate_residual_c = 0.0;
};

/// Legacy VTK file of the mesh with u, omega, j, E, H and B evaluated at
/// cell centroids and P at the vertices.
void write_state_vtk(std::ostream& os, const OperatorContext& ctx, const MhdState& state);

void write_csv_header(std::ostream& os);
void write_csv_row(std::ostream& os, const DiagnosticsRow& row);

/// Summary of a run: drifts relative to the initial values and maxima of
/// the per-step quantities.
struct ConservationReport {
  int steps = 0;
  double energy_drift = 0.0;              ///< max_n |E_n - E_0| / |E_0|
  double magnetic_helicity_drift = 0.0;   ///< relative to max(|H_m^0|, E_0)
  double cross_helicity_drift = 0.0;      ///< relative to max(|H_c^0|, E_0)
  double max_divergence = 0.0;
  double max_energy_residual = 0.0;
  double max_helicity_residual_m = 0.0;
  double max_helicity_residual_c = 0.0;
  double gauge_difference = 0.0;          ///< max |H_m(mass gauge) - H_m(coefficient gauge)| / max(|H_m|, |A||B|)
};

/// Accumulates diagnostics over a run.
class ConservationTracker {
 public:
  /// With `check_gauge`, the magnetic helicity is also computed in the
  /// coefficient gauge at every level.
  explicit ConservationTracker(const MhdSolver& solver, bool check_gauge = false);

  void start(const MhdState& initial);
  const DiagnosticsRow& record(const MhdState& prev, const StepResult& step, double dt);

  const std::vector<DiagnosticsRow>& rows() const { return rows_; }
  const ConservationReport& report() const { return report_; }

 private:
  DiagnosticsRow level_row(int step, const MhdState& s);

  const MhdSolver* solver_;
  bool check_gauge_;
  std::vector<DiagnosticsRow> rows_;
  ConservationReport report_;
  double e0_ = 0.0, hm0_ = 0.0, hc0_ = 0.0;
};

}  // namespace smhd
