#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "smhd/checkpoint.hpp"
#include "smhd/diagnostics.hpp"
#include "smhd/error.hpp"
#include "smhd/verification.hpp"
#include "test_util.hpp"

using namespace smhd;
using smhd::tu::max_abs;

namespace {

bool same_state(const MhdState& a, const MhdState& b) {
  return a.t == b.t && a.u.coeffs == b.u.coeffs && a.omega.coeffs == b.omega.coeffs && a.j.coeffs == b.j.coeffs &&
         a.E.coeffs == b.E.coeffs && a.H.coeffs == b.H.coeffs && a.B.coeffs == b.B.coeffs && a.P.coeffs == b.P.coeffs;
}

double state_diff(const MhdState& a, const MhdState& b) {
  double d = 0.0;
  for (auto [x, y] : {std::pair{&a.u, &b.u}, {&a.omega, &b.omega}, {&a.j, &b.j}, {&a.E, &b.E}, {&a.H, &b.H},
                      {&a.B, &b.B}, {&a.P, &b.P}})
    d = std::max(d, max_abs(Vector(x->coeffs - y->coeffs)));
  return d;
}

class SolverTest : public ::testing::Test {
 protected:
  SolverTest()
      : mesh_(build_box_mesh(3)),
        ctx_(mesh_),
        params_(PhysParams::from_reynolds(1.0, 1.0)),
        case_(build_case("decay-trig", params_)),
        src_(case_.sources()) {}

  MhdState initial(const MhdSolver& s) const { return s.init_state(case_.u, case_.B, src_, 0.0); }

  TetMesh mesh_;
  OperatorContext ctx_;
  PhysParams params_;
  ManufacturedCase case_;
  SourceTerms src_;
};

}  // namespace

TEST(PhysParams, Validation) {
  EXPECT_NO_THROW(PhysParams::from_reynolds(10.0, INFINITY).validate());
  EXPECT_TRUE(PhysParams::from_reynolds(INFINITY, INFINITY).is_ideal());
  EXPECT_EQ(PhysParams::from_reynolds(4.0, 2.0).inv_rm, 0.5);
  EXPECT_THROW(PhysParams::from_reynolds(0.0, 1.0), InvalidArgument);
  EXPECT_THROW(PhysParams::from_reynolds(1.0, -2.0), InvalidArgument);
  EXPECT_THROW((PhysParams{1.0, 1.0, 0.0, 1.0}.validate()), InvalidArgument);
  EXPECT_THROW((PhysParams{1.0, 1.0, 1.0, -1.0}.validate()), InvalidArgument);
  EXPECT_THROW((PhysParams{-1.0, 1.0, 1.0, 1.0}.validate()), InvalidArgument);
  EXPECT_THROW((PhysParams{NAN, 1.0, 1.0, 1.0}.validate()), InvalidArgument);
}

TEST_F(SolverTest, ZeroStateIsAFixedPoint) {
  const MhdSolver s(ctx_, params_);
  MhdState z = s.zero_state();
  for (int i = 0; i < 3; ++i) {
    const StepResult r = s.step_midpoint(z, 0.05);
    EXPECT_EQ(r.report.iterations, 0);
    z = r.state;
  }
  EXPECT_EQ(max_abs(z.u.coeffs), 0.0);
  EXPECT_EQ(max_abs(z.B.coeffs), 0.0);
  EXPECT_EQ(max_abs(z.P.coeffs), 0.0);
  EXPECT_DOUBLE_EQ(z.t, 0.15);
  const MhdState zi = s.init_state(AnalyticField::zero(), AnalyticField::zero());
  EXPECT_EQ(max_abs(zi.u.coeffs) + max_abs(zi.B.coeffs) + max_abs(zi.E.coeffs), 0.0);
}

TEST_F(SolverTest, InitialStateInvariants) {
  const MhdSolver s(ctx_, params_);
  const MhdState st = initial(s);
  EXPECT_LE(ctx_.divergence_norm(st.B), 1e-13);
  // u_h^0 is discretely divergence free.
  EXPECT_LT(max_abs(Vector(ctx_.grad().transpose() * (ctx_.mass_nedelec() * ctx_.free(st.u)))), 1e-13);
  const ConsistencyReport rep = s.reduced_consistency_check(st);
  EXPECT_LE(rep.max(), 1e-10);
  EXPECT_LE(rep.explicit_current, 1e-10);
  // B_h^0 is the divergence-free L^2 projection of B0.
  EXPECT_LT(max_abs(Vector(st.B.coeffs - ctx_.pi_tilde_rt(case_.B, 0.0).coeffs)), 1e-12);
}

TEST_F(SolverTest, RejectsDivergentInitialField) {
  const MhdSolver s(ctx_, params_);
  AnalyticField b;
  b.value = [](const Vec3& x, double) { return Vec3(x.x() * (1.0 - x.x()), 0.0, 0.0); };
  EXPECT_THROW(s.init_state(AnalyticField::zero(), b), DivergenceError);
}

TEST_F(SolverTest, ConvergedStepSatisfiesEverything) {
  const MhdSolver s(ctx_, params_);
  MhdState st = initial(s);
  for (int i = 0; i < 3; ++i) {
    const StepResult r = s.step_midpoint(st, 0.02, src_);
    EXPECT_TRUE(r.report.converged);
    EXPECT_LE(r.report.iterations, 50);
    EXPECT_LE(max_abs(s.midpoint_residual(st, r.state, r.mid, 0.02, src_)), 1e-11);
    EXPECT_LE(ctx_.divergence_norm(r.state.B), 1e-12);
    EXPECT_LE(s.reduced_consistency_check(r.state).max(), 1e-10);
    EXPECT_LE(s.reduced_consistency_check(r.state).explicit_current, 1e-10);
    // Antisymmetric terms do no work.
    const Vector um = ctx_.free(r.mid.u);
    const FieldVector w = r.mid.omega;
    const Vector uxw = ctx_.nedelec().restrict(cross_form(r.mid.u, w, ctx_.nedelec()));
    EXPECT_LE(std::abs(uxw.dot(um)), 1e-12);
    st = r.state;
  }
}

TEST_F(SolverTest, ConsistencyCheckDetectsPerturbation) {
  const MhdSolver s(ctx_, params_);
  MhdState st = initial(s);
  const double eps = 1e-6;
  const int dof = ctx_.nedelec().free_dofs()[7];
  st.j.coeffs[dof] += eps;
  const ConsistencyReport rep = s.reduced_consistency_check(st);
  const Vector e = ctx_.free(FieldVector(ctx_.nedelec(), [&] {
    Vector v = Vector::Zero(st.j.size());
    v[dof] = eps;
    return v;
  }()));
  const double expected = std::sqrt(e.dot(ctx_.mass_nedelec() * e));
  EXPECT_NEAR(rep.ampere, expected, 1e-3 * expected);
  EXPECT_GT(rep.ohm, 0.5 * expected);
}

TEST_F(SolverTest, IdealLimitConsistency) {
  const PhysParams ideal = PhysParams::ideal();
  const MhdSolver s(ctx_, ideal);
  const ManufacturedCase h = build_case("helical", ideal);
  const MhdState st = s.init_state(h.u, h.B);
  const StepResult r = s.step_midpoint(st, 0.02);
  const ConsistencyReport rep = s.reduced_consistency_check(r.state);
  EXPECT_TRUE(std::isnan(rep.explicit_current));
  EXPECT_LE(rep.max(), 1e-10);
}

TEST_F(SolverTest, IdealEnergyAndPotentialEvolution) {
  const PhysParams ideal = PhysParams::ideal();
  const MhdSolver s(ctx_, ideal);
  const ManufacturedCase h = build_case("helical", ideal);
  MhdState st = s.init_state(AnalyticField::zero(), h.B);
  const double e0 = energy(ctx_, st);
  for (int i = 0; i < 10; ++i) {
    const double dt = 0.02;
    const StepResult r = s.step_midpoint(st, dt);
    // curl((A^{n+1} - A^n)/dt + E^{n+1/2}) = 0
    const Vector a0 = ctx_.free(ctx_.vector_potential(st.B));
    const Vector a1 = ctx_.free(ctx_.vector_potential(r.state.B));
    const Vector defect = ctx_.curl() * ((a1 - a0) / dt + ctx_.free(r.mid.E));
    EXPECT_LE(max_abs(defect), 1e-10);
    st = r.state;
  }
  EXPECT_LE(std::abs(energy(ctx_, st) - e0) / e0, 1e-10);
  EXPECT_GT(ctx_.l2_norm(st.u), 0.0);
}

TEST_F(SolverTest, PicardAndNewtonAgree) {
  SolverOptions opt;
  opt.reuse_jacobian = false;
  const MhdSolver s(ctx_, params_, opt);
  const MhdState st = initial(s);
  const StepResult p = s.solve_nonlinear(st, 0.02, 1e-12, NonlinearScheme::Picard, src_);
  const StepResult n = s.solve_nonlinear(st, 0.02, 1e-12, NonlinearScheme::Newton, src_);
  EXPECT_LE(state_diff(p.state, n.state), 1e-10);
  EXPECT_LE(n.report.iterations, p.report.iterations);
  for (bool b : n.report.newton) EXPECT_TRUE(b);
  for (bool b : p.report.newton) EXPECT_FALSE(b);
  // Newton: each residual at most a modest multiple of the square of the previous one, until the round-off floor.
  const auto& r = n.report.residuals;
  ASSERT_GE(r.size(), 3u);
  const double r0 = r[0];
  for (std::size_t i = 1; i + 1 < r.size(); ++i) {
    if (r[i] > 1e-10 * r0) {
      EXPECT_LE(r[i + 1], 10.0 * r[i] * r[i] / r0 + 1e-13);
    }
  }
}

TEST_F(SolverTest, JacobianReuseReachesSameTolerance) {
  SolverOptions fresh;
  fresh.reuse_jacobian = false;
  const MhdSolver a(ctx_, params_), b(ctx_, params_, fresh);
  MhdState sa = initial(a), sb = sa;
  int fa = 0, fb = 0;
  for (int i = 0; i < 4; ++i) {
    const StepResult ra = a.step_midpoint(sa, 0.02, src_);
    const StepResult rb = b.step_midpoint(sb, 0.02, src_);
    fa += ra.report.factorizations;
    fb += rb.report.factorizations;
    EXPECT_LE(max_abs(a.midpoint_residual(sa, ra.state, ra.mid, 0.02, src_)), 1e-11);
    sa = ra.state;
    sb = rb.state;
  }
  EXPECT_LE(state_diff(sa, sb), 1e-9);
  EXPECT_LT(fa, fb);
}

TEST_F(SolverTest, ReportsNonConvergence) {
  SolverOptions opt;
  opt.max_iterations = 1;
  opt.scheme = NonlinearScheme::Picard;
  const MhdSolver s(ctx_, params_, opt);
  const MhdState st = initial(s);
  try {
    s.step_midpoint(st, 0.05, src_);
    FAIL() << "expected NonlinearSolveError";
  } catch (const NonlinearSolveError& e) {
    EXPECT_EQ(e.iterations(), 1);
    EXPECT_GT(e.residual(), 1e-12);
  }
}

TEST_F(SolverTest, RejectsBadArguments) {
  const MhdSolver s(ctx_, params_);
  const MhdState st = s.zero_state();
  EXPECT_THROW(s.step_midpoint(st, 0.0), InvalidArgument);
  EXPECT_THROW(s.step_midpoint(st, -1.0), InvalidArgument);
  EXPECT_THROW(s.step_midpoint(st, NAN), InvalidArgument);
  SolverOptions bad;
  bad.tol = 0.0;
  EXPECT_THROW(MhdSolver(ctx_, params_, bad), InvalidArgument);
  EXPECT_THROW(MhdSolver(ctx_, PhysParams{1.0, 1.0, 1.0, 0.0}), InvalidArgument);
}

TEST_F(SolverTest, SerialAndParallelStepsAreBitwiseIdentical) {
  SolverOptions ser;
  ser.exec = Exec::Serial;
  const OperatorContext cs(mesh_, 0, {}, Exec::Serial);
  const MhdSolver a(ctx_, params_), b(cs, params_, ser);
  MhdState sa = initial(a), sb = initial(b);
  EXPECT_TRUE(same_state(sa, sb));
  for (int i = 0; i < 2; ++i) {
    sa = a.step_midpoint(sa, 0.02, src_).state;
    sb = b.step_midpoint(sb, 0.02, src_).state;
  }
  EXPECT_TRUE(same_state(sa, sb));
}

TEST_F(SolverTest, CheckpointRoundTripAndRestart) {
  SolverOptions opt;
  opt.reuse_jacobian = false;
  const MhdSolver s(ctx_, params_, opt);
  MhdState st = s.step_midpoint(initial(s), 0.02, src_).state;
  std::stringstream io;
  write_checkpoint(io, st, ctx_);
  const MhdState back = read_checkpoint(io, ctx_);
  EXPECT_TRUE(same_state(st, back));
  EXPECT_EQ(back.params.inv_re, st.params.inv_re);
  const MhdState cont = s.step_midpoint(st, 0.02, src_).state;
  const MhdSolver fresh(ctx_, params_, opt);
  const MhdState restarted = fresh.step_midpoint(back, 0.02, src_).state;
  EXPECT_TRUE(same_state(cont, restarted));
}

TEST_F(SolverTest, CheckpointRejectsMismatch) {
  const MhdSolver s(ctx_, params_);
  std::stringstream io;
  write_checkpoint(io, s.zero_state(), ctx_);
  const TetMesh other = build_box_mesh(2);
  const OperatorContext co(other);
  EXPECT_THROW(read_checkpoint(io, co), Error);
  std::stringstream bad("smhd-checkpoint 99\n");
  EXPECT_THROW(read_checkpoint(bad, ctx_), Error);
  std::stringstream junk("hello\n");
  EXPECT_THROW(read_checkpoint(junk, ctx_), Error);
}
