#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "smhd/mhd_solver.hpp"

namespace smhd {

/// Settings of one CLI run. Read from an INI-style file:
///
///   [mesh]        n
///   [physics]     Re, Rm (a number or "inf"), s, mu
///   [time]        dt, steps
///   [case]        name
///   [solver]      tol, max_iterations, scheme (picard | newton | auto), newton_switch, exec (serial | parallel)
///   [output]      dir, vtk_every, checkpoint_every, restart
///   [convergence] levels, final_time, dt_factor, min_eoc
///   [operators]   levels
///   [conserve]    tol
///   [debug]       mutate_incidence
///
/// Unknown sections or keys are errors.
struct RunConfig {
  int n = 4;
  PhysParams params;
  double dt = 0.01;
  int steps = 50;
  std::string case_name = "decay-trig";
  SolverOptions solver;
  std::string out_dir = "out";
  int vtk_every = 0;
  int checkpoint_every = 0;
  std::string restart;
  std::vector<int> levels{2, 4, 8};
  double final_time = 0.1;
  double dt_factor = 0.1;
  double min_eoc = 0.9;
  /// Levels of the interpolation and projection rate study.
  std::vector<int> operator_levels{8, 12, 16};
  double conserve_tol = 1e-8;
  /// Test fixture: flip one incidence entry so that the exactness check fails.
  bool mutate_incidence = false;

  /// Throws ConfigError on out-of-range values.
  void validate() const;
};

/// Throws ConfigError with the offending line on malformed input.
RunConfig parse_config(std::istream& is, const std::string& source = "<config>");
RunConfig load_config(const std::string& path);

}  // namespace smhd
