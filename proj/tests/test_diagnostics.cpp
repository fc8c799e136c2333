#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "smhd/diagnostics.hpp"
#include "smhd/verification.hpp"
#include "test_util.hpp"

using namespace smhd;

namespace {

AnalyticField constant_b() {
  AnalyticField b = AnalyticField::constant(Vec3(1.0, 0.0, 0.0));
  b.div = [](const Vec3&, double) { return 0.0; };
  return b;
}

}  // namespace

TEST(Diagnostics, EnergyOfSimpleStates) {
  const TetMesh m = build_box_mesh(2);
  const OperatorContext c(m);
  const PhysParams p = PhysParams::ideal();
  EXPECT_EQ(energy(c, p, FieldVector(c.nedelec()), FieldVector(c.rt())), 0.0);
  // The constant field (1, 0, 0) with the boundary fluxes kept.
  const FieldVector b = interpolate_rt(c.rt(), constant_b());
  const Space& r = c.rt();
  const double eb = 0.5 * b.coeffs.dot(mass_matrix(r) * b.coeffs);
  EXPECT_NEAR(eb, 0.5, 1e-14);
  // Scaling u by 2 quadruples the kinetic part.
  std::mt19937 rng(1);
  const FieldVector u = tu::random_field(c.nedelec(), rng);
  const FieldVector u2(c.nedelec(), 2.0 * u.coeffs);
  const FieldVector zb(c.rt());
  EXPECT_NEAR(energy(c, p, u2, zb), 4.0 * energy(c, p, u, zb), 1e-12);
  const PhysParams q{0.0, 0.0, 3.0, 2.0};
  const FieldVector bd = tu::random_divfree(c, rng);
  EXPECT_NEAR(energy(c, q, FieldVector(c.nedelec()), bd), 0.75 * c.inner(bd, bd), 1e-12);
}

TEST(Diagnostics, HelicitiesOfSimpleStates) {
  const TetMesh m = build_box_mesh(3);
  const OperatorContext c(m);
  EXPECT_EQ(magnetic_helicity(c, FieldVector(c.rt())), 0.0);
  std::mt19937 rng(2);
  const FieldVector v = tu::random_field(c.nedelec(), rng);
  const FieldVector b = c.curl(v);
  EXPECT_NEAR(magnetic_helicity(c, b), c.inner(v, b), 1e-10 * std::max(1.0, std::abs(c.inner(v, b))));
  EXPECT_EQ(cross_helicity(c, FieldVector(c.nedelec()), b), 0.0);
  // u = (g, 0, 0) against B = (0, h, 0): orthogonal pointwise.
  AnalyticField u, bb;
  u.value = [](const Vec3& x, double) { return Vec3(std::sin(M_PI * x.y()) * std::sin(M_PI * x.z()), 0.0, 0.0); };
  bb.value = [](const Vec3& x, double) { return Vec3(0.0, std::sin(M_PI * x.y()), 0.0); };
  const FieldVector uh = interpolate_nedelec(c.nedelec(), u, 0.0, Boundary::Keep, 8);
  const FieldVector bh = interpolate_rt(c.rt(), bb, 0.0, Boundary::Keep, 8);
  const Vector uf = uh.coeffs, bf = bh.coeffs;
  const double hc = uf.dot(mixed_mass_matrix(c.nedelec(), c.rt()) * bf);
  EXPECT_LT(std::abs(hc), 0.05);
}

TEST(Diagnostics, BalancesCloseOnResistiveRun) {
  const TetMesh m = build_box_mesh(3);
  const OperatorContext c(m);
  const PhysParams p = PhysParams::from_reynolds(1.0, 1.0);
  const MhdSolver s(c, p);
  const ManufacturedCase mc = build_case("decay-trig", p);
  const SourceTerms src = mc.sources();
  MhdState st = s.init_state(mc.u, mc.B, src);
  ConservationTracker tr(s, true);
  tr.start(st);
  for (int i = 0; i < 5; ++i) {
    const StepResult r = s.step_midpoint(st, 0.01, src);
    const StepBalance bal = step_balance(s, st, r, 0.01);
    EXPECT_LE(bal.energy_residual, 1e-8);
    EXPECT_LE(bal.helicity_rate_residual_m, 1e-8);
    EXPECT_LE(bal.helicity_rate_residual_c, 1e-8);
    EXPECT_GT(bal.viscous_dissipation, 0.0);
    EXPECT_GT(bal.ohmic_dissipation, 0.0);
    tr.record(st, r, 0.01);
    st = r.state;
  }
  const ConservationReport& rep = tr.report();
  EXPECT_EQ(rep.steps, 5);
  EXPECT_EQ(tr.rows().size(), 6u);
  EXPECT_LE(rep.max_divergence, 1e-12);
  EXPECT_LE(rep.gauge_difference, 1e-10);
  for (const auto& row : tr.rows()) EXPECT_TRUE(std::isfinite(row.energy) && row.energy >= 0.0);
}

TEST(Diagnostics, IdealRunConservesInvariants) {
  const TetMesh m = build_box_mesh(3);
  const OperatorContext c(m);
  const PhysParams p = PhysParams::ideal();
  const MhdSolver s(c, p);
  const ManufacturedCase mc = build_case("helical", p);
  MhdState st = s.init_state(mc.u, mc.B);
  ConservationTracker tr(s, true);
  tr.start(st);
  for (int i = 0; i < 10; ++i) {
    StepResult r = s.step_midpoint(st, 0.02);
    tr.record(st, r, 0.02);
    st = std::move(r.state);
  }
  const ConservationReport& rep = tr.report();
  EXPECT_LE(rep.energy_drift, 1e-10);
  EXPECT_LE(rep.magnetic_helicity_drift, 1e-8);
  EXPECT_LE(rep.cross_helicity_drift, 1e-8);
  EXPECT_LE(rep.max_helicity_residual_m, 1e-8);
  EXPECT_LE(rep.max_helicity_residual_c, 1e-8);
  EXPECT_GT(std::abs(tr.rows().front().magnetic_helicity), 1e-3);
}

TEST(Diagnostics, ZeroFieldBalances) {
  const TetMesh m = build_box_mesh(2);
  const OperatorContext c(m);
  const MhdSolver s(c, PhysParams::from_reynolds(1.0, 1.0));
  const MhdState z = s.zero_state();
  const StepResult r = s.step_midpoint(z, 0.1);
  const StepBalance b = step_balance(s, z, r, 0.1);
  EXPECT_EQ(b.magnetic_helicity_rate, 0.0);
  EXPECT_EQ(b.magnetic_helicity_source, 0.0);
  EXPECT_EQ(b.cross_helicity_rate, 0.0);
  EXPECT_EQ(b.energy_residual, 0.0);
}

TEST(Diagnostics, CsvAndVtkOutput) {
  std::ostringstream os;
  write_csv_header(os);
  DiagnosticsRow row;
  row.step = 3;
  row.t = 0.125;
  row.energy = 1.0 / 3.0;
  write_csv_row(os, row);
  const std::string s = os.str();
  EXPECT_EQ(s.substr(0, s.find('\n')),
            "step,t,energy,viscous_dissipation,ohmic_dissipation,work,magnetic_helicity,cross_helicity,div_B_max,"
            "energy_residual,helicity_rate_residual_m,helicity_rate_residual_c");
  EXPECT_NE(s.find("3,0.125,0.33333333333333331,"), std::string::npos);

  const TetMesh m = build_box_mesh(1);
  const OperatorContext c(m);
  const MhdSolver sol(c, PhysParams::ideal());
  std::ostringstream v;
  write_state_vtk(v, c, sol.zero_state());
  EXPECT_NE(v.str().find("CELL_DATA 6"), std::string::npos);
  EXPECT_NE(v.str().find("VECTORS B"), std::string::npos);
  EXPECT_NE(v.str().find("SCALARS P"), std::string::npos);
}
