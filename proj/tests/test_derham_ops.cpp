#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "smhd/diagnostics.hpp"
#include "smhd/error.hpp"
#include "smhd/verification.hpp"
#include "test_util.hpp"

using namespace smhd;
using smhd::tu::max_abs;
using smhd::tu::random_divfree;
using smhd::tu::random_field;

namespace {

// grad of phi = sin(pi x) sin(pi y) sin(pi z) x, which vanishes on the boundary.
AnalyticField gradient_field() {
  AnalyticField f;
  f.value = [](const Vec3& x, double) -> Vec3 {
    const double sx = std::sin(M_PI * x.x()), sy = std::sin(M_PI * x.y()), sz = std::sin(M_PI * x.z());
    const double cx = std::cos(M_PI * x.x()), cy = std::cos(M_PI * x.y()), cz = std::cos(M_PI * x.z());
    return {(M_PI * cx * x.x() + sx) * sy * sz, M_PI * sx * cy * sz * x.x(), M_PI * sx * sy * cz * x.x()};
  };
  f.curl = [](const Vec3&, double) -> Vec3 { return Vec3::Zero(); };
  return f;
}

class DerhamTest : public ::testing::Test {
 protected:
  DerhamTest() : mesh_(build_box_mesh(3)), ctx_(mesh_), rng_(17) {}
  TetMesh mesh_;
  OperatorContext ctx_;
  std::mt19937 rng_;
};

}  // namespace

TEST_F(DerhamTest, CoefficientOperatorsFormAComplex) {
  EXPECT_LT(max_abs(SparseMatrix(ctx_.curl() * ctx_.grad())), 1e-300);
  EXPECT_LT(max_abs(SparseMatrix(ctx_.flux_div() * ctx_.curl())), 1e-300);
}

TEST_F(DerhamTest, QhIsIdentityOnDiscreteFields) {
  const FieldVector v = random_field(ctx_.nedelec(), rng_);
  EXPECT_LT(max_abs(Vector(ctx_.q_h_project(v).coeffs - v.coeffs)), 1e-12);
  EXPECT_LT(max_abs(ctx_.q_h_project(AnalyticField::zero()).coeffs), 1e-300);
  EXPECT_THROW(ctx_.q_h_project(random_field(ctx_.lagrange(), rng_)), InvalidArgument);
}

TEST_F(DerhamTest, QhResidualIsOrthogonal) {
  const AnalyticField e = smooth_edge_field();
  const FieldVector q = ctx_.q_h_project(e);
  const Vector load = ctx_.nedelec().restrict(load_vector(ctx_.nedelec(), e, 0.0));
  EXPECT_LT(max_abs(Vector(ctx_.mass_nedelec() * ctx_.free(q) - load)), 1e-12);
  // Q_h of an RT field tested against Nedelec fields.
  const FieldVector b = random_divfree(ctx_, rng_);
  const FieldVector qb = ctx_.q_h_project(b);
  const FieldVector w = random_field(ctx_.nedelec(), rng_);
  EXPECT_NEAR(ctx_.inner(qb, w), ctx_.inner(w, b), 1e-12);
}

TEST_F(DerhamTest, DiscreteCurlIsAdjoint) {
  for (int i = 0; i < 100; ++i) {
    const FieldVector b = random_field(ctx_.rt(), rng_);
    const FieldVector v = random_field(ctx_.nedelec(), rng_);
    const double lhs = ctx_.inner(ctx_.curl_h(b), v);
    const double rhs = ctx_.inner(b, ctx_.curl(v));
    EXPECT_LE(std::abs(lhs - rhs), 1e-12 * ctx_.l2_norm(b) * ctx_.l2_norm(v));
  }
  const FieldVector v = random_field(ctx_.nedelec(), rng_);
  const FieldVector cv = ctx_.curl(v);
  EXPECT_NEAR(ctx_.inner(ctx_.curl_h(cv), v), std::pow(ctx_.l2_norm(cv), 2), 1e-12);
  EXPECT_LT(max_abs(ctx_.curl_h(FieldVector(ctx_.rt())).coeffs), 1e-300);
}

TEST_F(DerhamTest, DiscreteCurlOfProjectionIsProjectedCurl) {
  // (P B, curl v) = (B, curl v) = (curl B, v) for v in H_0^h(curl), up to
  // quadrature error on the smooth data.
  const ManufacturedCase hc = build_case("helical", PhysParams::ideal());
  AnalyticField cb;
  cb.value = hc.B.curl;
  double prev = 1.0;
  for (int n : {2, 3, 4}) {
    const TetMesh m = build_box_mesh(n);
    const OperatorContext c(m);
    const Vector lhs = c.free(c.curl_h(c.pi_tilde_rt(hc.B)));
    const Vector rhs = c.free(c.q_h_project(cb));
    const double rel = (lhs - rhs).norm() / rhs.norm();
    EXPECT_LT(rel, 1e-3) << n;
    EXPECT_LT(rel, prev / 4.0) << n;
    prev = rel;
  }
}

TEST_F(DerhamTest, PiNIsIdentityOnDiscreteFieldsWithZeroMultiplier) {
  const FieldVector e = random_field(ctx_.nedelec(), rng_);
  const PiNResult r = ctx_.pi_n(e);
  EXPECT_LT(max_abs(Vector(r.field.coeffs - e.coeffs)), 1e-12);
  EXPECT_LT(max_abs(r.multiplier.coeffs), 1e-10);
}

TEST_F(DerhamTest, PiNSatisfiesDefiningEquations) {
  for (const AnalyticField& e : commuting_fields()) {
    const PiNResult r = ctx_.pi_n(e);
    EXPECT_LT(max_abs(r.multiplier.coeffs), 1e-10);
    AnalyticField ce;
    ce.value = e.curl;
    // a(Pi E, F) = (curl E, curl F) and (Pi E - E, grad Q) = 0.
    const Vector a_rhs = ctx_.curl().transpose() * ctx_.rt().restrict(load_vector(ctx_.rt(), ce, 0.0));
    EXPECT_LT(max_abs(Vector(ctx_.curl_curl() * ctx_.free(r.field) - a_rhs)), 1e-12);
    const Vector g_rhs = ctx_.grad().transpose() * ctx_.nedelec().restrict(load_vector(ctx_.nedelec(), e, 0.0));
    EXPECT_LT(max_abs(Vector(ctx_.grad().transpose() * (ctx_.mass_nedelec() * ctx_.free(r.field)) - g_rhs)), 1e-12);
  }
}

TEST_F(DerhamTest, PiNOfGradientIsCurlFree) {
  const PiNResult r = ctx_.pi_n(gradient_field());
  EXPECT_LT(max_abs(ctx_.curl(r.field).coeffs), 1e-12);
  EXPECT_LT(ctx_.commuting_check(gradient_field()), 1e-12);
}

TEST(Derham, CommutingDiagramOnBattery) {
  for (int n = 1; n <= 3; ++n) {
    const TetMesh m = build_box_mesh(n);
    const OperatorContext c(m);
    for (const AnalyticField& e : commuting_fields()) EXPECT_LE(c.commuting_check(e), 1e-10) << "n = " << n;
  }
}

TEST_F(DerhamTest, PiTildeIsDivergenceFreeAndOrthogonal) {
  const AnalyticField b = smooth_divfree_field();
  const FieldVector p = ctx_.pi_tilde_rt(b);
  EXPECT_LE(ctx_.divergence_norm(p), 1e-12);
  const Vector load = ctx_.rt().restrict(load_vector(ctx_.rt(), b, 0.0));
  for (int i = 0; i < 20; ++i) {
    const FieldVector c = random_divfree(ctx_, rng_);
    EXPECT_LT(std::abs(ctx_.free(c).dot(ctx_.mass_rt() * ctx_.free(p) - load)), 1e-12 * std::max(1.0, ctx_.l2_norm(c)));
  }
  // A field with divergence is projected onto the div-free subspace too.
  AnalyticField radial;
  radial.value = [](const Vec3& x, double) { return Vec3(x.x() * (1 - x.x()), 0.0, 0.0); };
  EXPECT_LE(ctx_.divergence_norm(ctx_.pi_tilde_rt(radial)), 1e-12);
}

TEST_F(DerhamTest, ProjectionsAreIdempotent) {
  const FieldVector q = ctx_.q_h_project(smooth_edge_field());
  EXPECT_LT(max_abs(Vector(ctx_.q_h_project(q).coeffs - q.coeffs)), 1e-12);
  const FieldVector pn = ctx_.pi_n(smooth_edge_field()).field;
  EXPECT_LT(max_abs(Vector(ctx_.pi_n(pn).field.coeffs - pn.coeffs)), 1e-12);
  const FieldVector pr = ctx_.pi_tilde_rt(smooth_divfree_field());
  EXPECT_LT(max_abs(Vector(ctx_.pi_tilde_rt(pr).coeffs - pr.coeffs)), 1e-12);
  const FieldVector d = random_divfree(ctx_, rng_);
  EXPECT_LT(max_abs(Vector(ctx_.pi_tilde_rt(d).coeffs - d.coeffs)), 1e-12);
}

TEST_F(DerhamTest, VectorPotentialInvertsCurl) {
  EXPECT_LT(max_abs(ctx_.vector_potential(FieldVector(ctx_.rt())).coeffs), 1e-300);
  for (int i = 0; i < 5; ++i) {
    const FieldVector v = random_field(ctx_.nedelec(), rng_);
    const FieldVector b = ctx_.curl(v);
    for (Gauge g : {Gauge::MassOrthogonal, Gauge::CoefficientOrthogonal}) {
      const FieldVector a = ctx_.vector_potential(b, g);
      EXPECT_LE(max_abs(Vector(ctx_.curl(a).coeffs - b.coeffs)), 1e-10);
      // a - v is a discrete gradient.
      const Vector diff = ctx_.free(a) - ctx_.free(v);
      const Vector p = ctx_.solve_stiffness_lagrange(ctx_.grad().transpose() * (ctx_.mass_nedelec() * diff));
      EXPECT_LT(max_abs(Vector(diff - ctx_.grad() * p)), 1e-10);
    }
    // Mass gauge: orthogonal to gradients.
    const FieldVector a = ctx_.vector_potential(b);
    EXPECT_LT(max_abs(Vector(ctx_.grad().transpose() * (ctx_.mass_nedelec() * ctx_.free(a)))), 1e-12);
  }
}

TEST_F(DerhamTest, VectorPotentialRejectsDivergence) {
  FieldVector b = random_divfree(ctx_, rng_);
  b.coeffs[ctx_.rt().free_dofs()[0]] += 1e-3;
  try {
    ctx_.vector_potential(b);
    FAIL() << "expected DivergenceError";
  } catch (const DivergenceError& e) {
    EXPECT_NEAR(e.divergence(), 1e-3, 1e-12);
  }
  EXPECT_THROW(magnetic_helicity(ctx_, b), DivergenceError);
}

TEST_F(DerhamTest, HelicityIsGaugeIndependent) {
  for (int i = 0; i < 5; ++i) {
    const FieldVector v = random_field(ctx_.nedelec(), rng_);
    const FieldVector b = ctx_.curl(v);
    const double h1 = magnetic_helicity(ctx_, b, Gauge::MassOrthogonal);
    const double h2 = magnetic_helicity(ctx_, b, Gauge::CoefficientOrthogonal);
    EXPECT_LE(std::abs(h1 - h2), 1e-10 * std::max(1.0, std::abs(h1)));
    EXPECT_NEAR(h1, ctx_.inner(v, b), 1e-10 * std::max(1.0, std::abs(h1)));
  }
}

TEST(Derham, ScalarsInvariantUnderReorientation) {
  const TetMesh m = build_box_mesh(2);
  std::mt19937 rng(23);
  Orientation o;
  o.edge_signs.resize(m.num_edges());
  o.face_signs.resize(m.num_faces());
  for (auto& s : o.edge_signs) s = (rng() & 1u) ? 1 : -1;
  for (auto& s : o.face_signs) s = (rng() & 1u) ? 1 : -1;
  const OperatorContext c0(m), c1(m, 0, o);
  const ManufacturedCase hc = build_case("helical", PhysParams::ideal());
  const PhysParams p = PhysParams::ideal();
  const FieldVector u0 = c0.q_h_project(hc.u), u1 = c1.q_h_project(hc.u);
  const FieldVector b0 = c0.pi_tilde_rt(hc.B), b1 = c1.pi_tilde_rt(hc.B);
  auto rel = [](double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(a)); };
  EXPECT_LT(rel(energy(c0, p, u0, b0), energy(c1, p, u1, b1)), 1e-12);
  EXPECT_LT(rel(magnetic_helicity(c0, b0), magnetic_helicity(c1, b1)), 1e-12);
  EXPECT_LT(rel(cross_helicity(c0, u0, b0), cross_helicity(c1, u1, b1)), 1e-12);
  EXPECT_LT(std::abs(c0.commuting_check(smooth_edge_field()) - c1.commuting_check(smooth_edge_field())), 1e-12);
}

TEST_F(DerhamTest, DivergenceOfCurlIsExact) {
  const FieldVector b = random_divfree(ctx_, rng_);
  EXPECT_LT(ctx_.divergence_norm(b), 1e-14);
  EXPECT_EQ(ctx_.flux_divergence(b).size(), static_cast<Eigen::Index>(mesh_.num_cells()));
}
