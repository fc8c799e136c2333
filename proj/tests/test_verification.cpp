#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "smhd/error.hpp"
#include "smhd/verification.hpp"

using namespace smhd;

namespace {

Vec3 fd_curl(const AnalyticField& f, const Vec3& x) {
  const double h = 1e-5;
  auto d = [&](int comp, int dir) {
    Vec3 a = x, b = x;
    a[dir] += h;
    b[dir] -= h;
    return (f(a)[comp] - f(b)[comp]) / (2 * h);
  };
  return {d(2, 1) - d(1, 2), d(0, 2) - d(2, 0), d(1, 0) - d(0, 1)};
}

}  // namespace

TEST(Verification, CaseSelfChecksPass) {
  for (const std::string& name : case_names()) {
    for (const PhysParams& p : {PhysParams::from_reynolds(1.0, 1.0), PhysParams::from_reynolds(10.0, INFINITY),
                                PhysParams{0.5, 2.0, 3.0, 0.5}}) {
      const ManufacturedCase c = build_case(name, p, false);
      EXPECT_LE(case_self_check(c), 1e-10) << name;
      EXPECT_EQ(c.name, name);
    }
  }
  EXPECT_THROW(build_case("no-such-case", PhysParams{}), InvalidArgument);
}

TEST(Verification, CasesSatisfyBoundaryConditions) {
  const ManufacturedCase c = build_case("decay-trig", PhysParams::from_reynolds(1.0, 1.0));
  for (double a : {0.0, 1.0})
    for (double s : {0.2, 0.55, 0.9})
      for (double r : {0.1, 0.7}) {
        for (int axis = 0; axis < 3; ++axis) {
          Vec3 x;
          x[axis] = a;
          x[(axis + 1) % 3] = s;
          x[(axis + 2) % 3] = r;
          Vec3 n = Vec3::Zero();
          n[axis] = 1.0;
          for (double t : {0.0, 0.3}) {
            EXPECT_LT(c.u(x, t).cross(n).norm(), 1e-14);
            EXPECT_LT(std::abs(c.B(x, t).dot(n)), 1e-14);
            EXPECT_LT(c.j(x, t).cross(n).norm(), 1e-13);
            EXPECT_LT(c.E(x, t).cross(n).norm(), 1e-13);
            EXPECT_LT(std::abs(c.P(x, t)), 1e-14);
          }
        }
      }
}

TEST(Verification, StaticAndZeroCases) {
  const ManufacturedCase s = build_case("static-B", PhysParams::from_reynolds(1.0, INFINITY));
  const Vec3 x(0.3, 0.6, 0.2);
  EXPECT_EQ(s.u(x, 0.4).norm(), 0.0);
  EXPECT_LT(s.E(x, 0.4).norm(), 1e-15);
  EXPECT_LT((s.B(x, 0.0) - s.B(x, 1.0)).norm(), 1e-15);
  const ManufacturedCase z = build_case("zero", PhysParams{});
  EXPECT_EQ(z.f(x, 0.1).norm() + z.B(x, 0.1).norm() + z.u(x, 0.1).norm(), 0.0);
}

TEST(Verification, CommutingFieldCurlsMatchDifferences) {
  const std::vector<Vec3> pts{Vec3(0.2, 0.3, 0.4), Vec3(0.9, 0.1, 0.5), Vec3(0.5, 0.5, 0.5)};
  for (const AnalyticField& f : commuting_fields())
    for (const Vec3& x : pts) EXPECT_LT((fd_curl(f, x) - f.curl(x, 0.0)).norm(), 1e-8);
  const AnalyticField b = smooth_divfree_field();
  for (const Vec3& x : pts) EXPECT_LT((fd_curl(b, x) - b.curl(x, 0.0)).norm(), 1e-7);
}

TEST(Verification, EocTableArithmetic) {
  EocTable t;
  t.columns = {"a", "b"};
  t.n = {2, 4, 8};
  t.h = {0.5, 0.25, 0.125};
  t.errors = {{1.0, 1.0}, {0.5, 0.25}, {0.25, 0.0625}};
  const auto r = t.rates();
  ASSERT_EQ(r.size(), 2u);
  EXPECT_NEAR(r[0][0], 1.0, 1e-14);
  EXPECT_NEAR(r[1][1], 2.0, 1e-14);
  EXPECT_NEAR(t.min_rate(), 1.0, 1e-14);
  std::ostringstream csv, txt;
  t.write_csv(csv);
  t.write_text(txt);
  EXPECT_EQ(csv.str().substr(0, csv.str().find('\n')), "n,h,a,a_eoc,b,b_eoc");
  EXPECT_NE(txt.str().find("2.00"), std::string::npos);
  t.errors[2][0] = std::nan("");
  EXPECT_EQ(t.min_rate(), -INFINITY);
  t.errors = {{0.0, 1.0}, {1e-14, 0.5}, {0.0, 0.25}};
  EXPECT_EQ(t.rates()[0][0], INFINITY);
  EXPECT_NEAR(t.min_rate(), 1.0, 1e-14);
}

TEST(Verification, ExactnessCheckAndMutation) {
  for (int n = 1; n <= 4; ++n) {
    const ExactnessReport r = check_exactness(build_box_mesh(n));
    EXPECT_TRUE(r.ok());
    EXPECT_EQ(r.euler_characteristic, 1);
  }
  const ExactnessReport bad = check_exactness(build_box_mesh(2), true);
  EXPECT_FALSE(bad.ok());
  EXPECT_GT(bad.d1d0_nonzeros, 0);
  EXPECT_NE(bad.describe().find("D1*D0"), std::string::npos);
}

TEST(Verification, ZeroCaseConvergesToZero) {
  ConvergenceOptions o;
  o.levels = {1, 2};
  o.final_time = 0.05;
  o.dt_factor = 0.1;
  const EocTable t = run_convergence(build_case("zero", PhysParams{}), o);
  for (const auto& row : t.errors)
    for (double e : row) EXPECT_LE(e, 1e-12);
  o.levels = {2};
  EXPECT_THROW(run_convergence(build_case("zero", PhysParams{}), o), InvalidArgument);
}

TEST(Verification, CoarseConvergenceDecreases) {
  ConvergenceOptions o;
  o.levels = {2, 3};
  o.final_time = 0.02;
  const EocTable t = run_convergence(build_case("decay-trig", PhysParams::from_reynolds(1.0, 1.0)), o);
  for (std::size_t c = 0; c < t.columns.size(); ++c) EXPECT_LT(t.errors[1][c], t.errors[0][c]) << t.columns[c];
}

TEST(Verification, OperatorRatesOnCoarseLevels) {
  const OperatorRates r = run_operator_rates({2, 4});
  EXPECT_EQ(r.table.columns.size(), 7u);
  EXPECT_LE(r.idempotence, 1e-12);
  EXPECT_LE(r.max_commuting, 1e-10);
  const auto rates = r.table.rates();
  for (double v : rates[0]) EXPECT_GT(v, 0.6);
}
