#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "smhd/mhd_solver.hpp"

namespace smhd {

/// Structural check of the incidence matrices on one mesh.
struct ExactnessReport {
  int n = 0;
  long long d1d0_nonzeros = 0;  ///< nonzero entries of D1 * D0
  long long d2d1_nonzeros = 0;  ///< nonzero entries of D2 * D1
  long long euler_characteristic = 0;  ///< V - E + F - C, 1 for a box

  bool ok() const { return d1d0_nonzeros == 0 && d2d1_nonzeros == 0 && euler_characteristic == 1; }
  std::string describe() const;
};

/// With `mutate`, one entry of D1 has its sign flipped first (a fixture for
/// checking that violations are reported).
ExactnessReport check_exactness(const TetMesh& mesh, bool mutate = false);

/// A closed-form solution of the forced MHD system on the unit cube together
/// with the forcing that makes it exact.
struct ManufacturedCase {
  std::string name;
  PhysParams params;
  AnalyticField u;
  AnalyticField omega;  ///< curl u
  AnalyticField A;      ///< vector potential, curl A = B
  AnalyticField B;
  AnalyticField j;      ///< curl B / mu
  AnalyticField E;
  ScalarField P;
  AnalyticField f;
  AnalyticField faraday_potential;  ///< Psi with curl Psi = g_B
  bool forced = true;

  SourceTerms sources() const;
};

/// Names accepted by build_case.
std::vector<std::string> case_names();

/// Builds the named case ("decay-trig", "static-B", "helical", "zero").
/// With `self_check`, derivatives are compared with central finite
/// differences at random points and an Error is thrown on mismatch.
/// "helical" is unforced initial data for conservation runs.
ManufacturedCase build_case(const std::string& name, const PhysParams& params, bool self_check = true);

/// Largest relative finite-difference mismatch over `samples` random points.
double case_self_check(const ManufacturedCase& c, int samples = 100, unsigned seed = 7);

/// Errors at levels n with estimated orders of convergence
/// log(e_prev / e) / log(h_prev / h). A pair of errors both below 1e-12 has
/// rate +inf; a NaN rate makes min_rate() return -inf.
struct EocTable {
  std::vector<std::string> columns;
  std::vector<int> n;
  std::vector<double> h;
  std::vector<std::vector<double>> errors;  ///< errors[level][column]

  /// rates[level - 1][column]
  std::vector<std::vector<double>> rates() const;
  double min_rate() const;
  void write_csv(std::ostream& os) const;
  void write_text(std::ostream& os) const;
};

struct ConvergenceOptions {
  std::vector<int> levels{2, 4, 8};
  double final_time = 0.1;
  double dt_factor = 0.1;  ///< dt = dt_factor * h^2
  SolverOptions solver;
};

/// Runs the manufactured case on each level and tabulates the L^2 errors of
/// u and B at the final time and the time-integrated midpoint errors of
/// curl u and j.
EocTable run_convergence(const ManufacturedCase& c, const ConvergenceOptions& options);

struct OperatorRates {
  EocTable table;
  double idempotence = 0.0;  ///< max relative defect of P(P x) = P x
  double max_commuting = 0.0;
};

/// Approximation errors of the interpolants and projections on smooth fields
/// and the idempotence of the projections.
OperatorRates run_operator_rates(const std::vector<int>& levels = {8, 12, 16}, Exec exec = Exec::Parallel);

/// Smooth test fields used by the operator checks: a scalar, a vector field
/// that vanishes tangentially on the boundary and a divergence-free field.
ScalarField smooth_scalar();
AnalyticField smooth_edge_field();
AnalyticField smooth_divfree_field();
/// Five fields for commuting-diagram checks.
std::vector<AnalyticField> commuting_fields();

}  // namespace smhd
