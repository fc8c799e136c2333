#include "smhd/mhd_solver.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "smhd/error.hpp"
#include "smhd/quadrature.hpp"

namespace smhd {

namespace {

double max_abs(const Vector& v) { return v.size() == 0 ? 0.0 : v.cwiseAbs().maxCoeff(); }

void append_block(std::vector<Triplet>& t, const SparseMatrix& m, Eigen::Index row0, Eigen::Index col0,
                  double scale) {
  for (Eigen::Index k = 0; k < m.outerSize(); ++k)
    for (SparseMatrix::InnerIterator it(m, k); it; ++it)
      t.emplace_back(static_cast<int>(row0 + it.row()), static_cast<int>(col0 + it.col()), scale * it.value());
}

void append_identity(std::vector<Triplet>& t, Eigen::Index n, Eigen::Index row0, Eigen::Index col0, double v) {
  for (Eigen::Index i = 0; i < n; ++i) t.emplace_back(static_cast<int>(row0 + i), static_cast<int>(col0 + i), v);
}

// Layout of the unknown vector and of the residual rows.
struct Layout {
  Eigen::Index nn, nr, nl;
  // unknowns
  Eigen::Index u() const { return 0; }
  Eigen::Index w() const { return nn; }
  Eigen::Index j() const { return 2 * nn; }
  Eigen::Index e() const { return 3 * nn; }
  Eigen::Index h() const { return 4 * nn; }
  Eigen::Index b() const { return 5 * nn; }
  Eigen::Index p() const { return 5 * nn + nr; }
  // equations, ordered so that every diagonal block except the pressure
  // one is a mass matrix
  Eigen::Index momentum() const { return u(); }
  Eigen::Index vorticity() const { return w(); }
  Eigen::Index ampere() const { return j(); }
  Eigen::Index ohm() const { return e(); }
  Eigen::Index constitutive() const { return h(); }
  Eigen::Index faraday() const { return b(); }
  Eigen::Index incompressibility() const { return p(); }
  Eigen::Index size() const { return 5 * nn + nr + nl; }
};

}  // namespace

PhysParams PhysParams::from_reynolds(double re, double rm, double sc, double mu) {
  if (!(re > 0.0) || !(rm > 0.0)) throw InvalidArgument("Reynolds numbers must be positive");
  PhysParams p;
  p.inv_re = std::isinf(re) ? 0.0 : 1.0 / re;
  p.inv_rm = std::isinf(rm) ? 0.0 : 1.0 / rm;
  p.sc = sc;
  p.mu = mu;
  p.validate();
  return p;
}

void PhysParams::validate() const {
  auto finite_nonneg = [](double v) { return std::isfinite(v) && v >= 0.0; };
  if (!finite_nonneg(inv_re)) throw InvalidArgument("1/Re must be finite and non-negative");
  if (!finite_nonneg(inv_rm)) throw InvalidArgument("1/Rm must be finite and non-negative");
  if (!(std::isfinite(sc) && sc > 0.0)) throw InvalidArgument("coupling number s must be positive");
  if (!(std::isfinite(mu) && mu > 0.0)) throw InvalidArgument("permeability mu must be positive");
}

double ConsistencyReport::max() const {
  double m = std::max({ohm, vorticity, ampere, constitutive, divergence});
  if (!std::isnan(explicit_current)) m = std::max(m, explicit_current);
  return m;
}

struct MhdSolver::JacobianCache {
  SparseLu lu;
  bool valid = false;
  bool newton = false;
};

MhdSolver::~MhdSolver() = default;
MhdSolver::MhdSolver(MhdSolver&&) noexcept = default;
MhdSolver& MhdSolver::operator=(MhdSolver&&) noexcept = default;

MhdSolver::MhdSolver(const OperatorContext& ctx, PhysParams params, SolverOptions options)
    : ctx_(&ctx), cache_(std::make_unique<JacobianCache>()), params_(params), options_(options) {
  params_.validate();
  if (!(options_.tol > 0.0)) throw InvalidArgument("nonlinear tolerance must be positive");
  if (options_.max_iterations < 1) throw InvalidArgument("max_iterations must be at least 1");
  if (!(options_.max_contraction > 0.0 && options_.max_contraction < 1.0))
    throw InvalidArgument("max_contraction must lie in (0, 1)");
  nn_ = static_cast<Eigen::Index>(ctx.nedelec().num_free());
  nr_ = static_cast<Eigen::Index>(ctx.rt().num_free());
  nl_ = static_cast<Eigen::Index>(ctx.lagrange().num_free());

  // Curl from all edge coefficients to interior face fluxes, for forcing
  // potentials that do not vanish on the boundary.
  const Space& n = ctx.nedelec();
  const Space& r = ctx.rt();
  const SparseMatrix d1 = incidence(ctx.mesh(), 1).cast<double>();
  Vector sn(static_cast<Eigen::Index>(n.num_dofs())), sr(static_cast<Eigen::Index>(r.num_dofs()));
  for (std::size_t i = 0; i < n.num_dofs(); ++i) sn[static_cast<Eigen::Index>(i)] = n.entity_sign(i);
  for (std::size_t i = 0; i < r.num_dofs(); ++i) sr[static_cast<Eigen::Index>(i)] = r.entity_sign(i);
  curl_full_ = r.restriction() * SparseMatrix(sr.asDiagonal() * d1 * sn.asDiagonal());
  curl_full_.makeCompressed();
}

Vector MhdSolver::cross(const Vector& a, const Vector& b) const {
  const Space& n = ctx_->nedelec();
  const FieldVector fa = ctx_->from_free(n, a);
  const FieldVector fb = ctx_->from_free(n, b);
  return n.restrict(cross_form(fa, fb, n, -1, options_.exec));
}

Vector MhdSolver::momentum_load(const SourceTerms& sources, double t) const {
  const Space& n = ctx_->nedelec();
  if (!sources.f) return Vector::Zero(nn_);
  return n.restrict(load_vector(n, *sources.f, t, -1, options_.exec));
}

Vector MhdSolver::faraday_load(const SourceTerms& sources, double t) const {
  if (!sources.faraday_potential) return Vector::Zero(nr_);
  const FieldVector psi = interpolate_nedelec(ctx_->nedelec(), *sources.faraday_potential, t, Boundary::Keep);
  return curl_full_ * psi.coeffs;
}

Vector MhdSolver::residual(const Vector& x, const Vector& u0, const Vector& b0, double dt, const Vector& f,
                           const Vector& g) const {
  const Layout L{nn_, nr_, nl_};
  const auto& c = *ctx_;
  const double mu = params_.mu;
  const Vector u1 = x.segment(L.u(), nn_);
  const Vector w = x.segment(L.w(), nn_);
  const Vector j = x.segment(L.j(), nn_);
  const Vector e = x.segment(L.e(), nn_);
  const Vector h = x.segment(L.h(), nn_);
  const Vector b1 = x.segment(L.b(), nr_);
  const Vector p = x.segment(L.p(), nl_);
  const Vector um = 0.5 * (u0 + u1);
  const Vector bm = 0.5 * (b0 + b1);

  const SparseMatrix& mn = c.mass_nedelec();
  Vector r(L.size());
  r.segment(L.momentum(), nn_) = mn * (u1 - u0) / dt - cross(um, w) + params_.inv_re * (c.curl_curl() * um) -
                                 params_.sc * mu * cross(j, h) + mn * (c.grad() * p) - f;
  r.segment(L.ampere(), nn_) = mu * (mn * j) - c.curl().transpose() * (c.mass_rt() * bm);
  r.segment(L.faraday(), nr_) = (b1 - b0) / dt + c.curl() * e - g;
  r.segment(L.ohm(), nn_) = params_.inv_rm * (mn * j) - mn * e - mu * cross(um, h);
  r.segment(L.incompressibility(), nl_) = c.grad().transpose() * (mn * um);
  r.segment(L.vorticity(), nn_) = mn * w - c.curl().transpose() * (c.mixed_mass().transpose() * um);
  r.segment(L.constitutive(), nn_) = c.mixed_mass() * bm - mu * (mn * h);
  return r;
}

SparseMatrix MhdSolver::jacobian(const Vector& x, const Vector& u0, double dt, bool newton) const {
  const Layout L{nn_, nr_, nl_};
  const auto& c = *ctx_;
  const Space& n = c.nedelec();
  const double mu = params_.mu;
  const double sc = params_.sc;
  const SparseMatrix& mn = c.mass_nedelec();
  const SparseMatrix r_n = n.restriction();
  const SparseMatrix e_n = r_n.transpose();

  const Vector um = 0.5 * (u0 + x.segment(L.u(), nn_));
  const FieldVector fu = c.from_free(n, um);
  const FieldVector fw = c.from_free(n, x.segment(L.w(), nn_));
  const FieldVector fj = c.from_free(n, x.segment(L.j(), nn_));
  const FieldVector fh = c.from_free(n, x.segment(L.h(), nn_));
  auto jac = [&](const FieldVector& a, const FieldVector& b, CrossArgument wrt) {
    SparseMatrix m = r_n * cross_jacobian(a, b, n, wrt, -1, options_.exec) * e_n;
    return m;
  };
  // d/da T(a, b) keeps b lagged; d/db is dropped by Picard but its pattern is
  // kept (scaled by zero) so that the symbolic factorisation can be reused.
  const double second = newton ? 1.0 : 0.0;
  const SparseMatrix t_uw_a = jac(fu, fw, CrossArgument::First);
  const SparseMatrix t_uw_b = jac(fu, fw, CrossArgument::Second);
  const SparseMatrix t_jh_a = jac(fj, fh, CrossArgument::First);
  const SparseMatrix t_jh_b = jac(fj, fh, CrossArgument::Second);
  const SparseMatrix t_uh_a = jac(fu, fh, CrossArgument::First);
  const SparseMatrix t_uh_b = jac(fu, fh, CrossArgument::Second);

  const SparseMatrix ctmr = c.curl().transpose() * c.mass_rt();
  const SparseMatrix ctxt = c.curl().transpose() * c.mixed_mass().transpose();
  const SparseMatrix mng = mn * c.grad();
  const SparseMatrix gtmn = c.grad().transpose() * mn;

  std::vector<Triplet> t;
  t.reserve(static_cast<std::size_t>(12 * mn.nonZeros() + 8 * c.curl().nonZeros() + 4 * mng.nonZeros()));
  // momentum
  append_block(t, mn, L.momentum(), L.u(), 1.0 / dt);
  append_block(t, c.curl_curl(), L.momentum(), L.u(), 0.5 * params_.inv_re);
  append_block(t, t_uw_a, L.momentum(), L.u(), -0.5);
  append_block(t, t_uw_b, L.momentum(), L.w(), -second);
  append_block(t, t_jh_a, L.momentum(), L.j(), -sc * mu);
  append_block(t, t_jh_b, L.momentum(), L.h(), -sc * mu * second);
  append_block(t, mng, L.momentum(), L.p(), 1.0);
  // ampere
  append_block(t, mn, L.ampere(), L.j(), mu);
  append_block(t, ctmr, L.ampere(), L.b(), -0.5);
  // faraday
  append_identity(t, nr_, L.faraday(), L.b(), 1.0 / dt);
  append_block(t, c.curl(), L.faraday(), L.e(), 1.0);
  // ohm
  append_block(t, mn, L.ohm(), L.j(), params_.inv_rm);
  append_block(t, mn, L.ohm(), L.e(), -1.0);
  append_block(t, t_uh_a, L.ohm(), L.u(), -0.5 * mu);
  append_block(t, t_uh_b, L.ohm(), L.h(), -mu * second);
  // incompressibility
  append_block(t, gtmn, L.incompressibility(), L.u(), 0.5);
  // vorticity
  append_block(t, mn, L.vorticity(), L.w(), 1.0);
  append_block(t, ctxt, L.vorticity(), L.u(), -0.5);
  // constitutive
  append_block(t, c.mixed_mass(), L.constitutive(), L.b(), 0.5);
  append_block(t, mn, L.constitutive(), L.h(), -mu);

  SparseMatrix m(L.size(), L.size());
  m.setFromTriplets(t.begin(), t.end());
  m.makeCompressed();
  return m;
}

MhdState MhdSolver::recover(const FieldVector& u, const FieldVector& b, double t, const SourceTerms& sources) const {
  const auto& c = *ctx_;
  const Space& n = c.nedelec();
  const double mu = params_.mu;
  const Vector uf = c.free(u);
  const Vector bf = c.free(b);

  const Vector w = c.solve_mass_nedelec(c.curl().transpose() * (c.mixed_mass().transpose() * uf));
  const Vector j = c.solve_mass_nedelec(c.curl().transpose() * (c.mass_rt() * bf)) / mu;
  const Vector h = c.solve_mass_nedelec(c.mixed_mass() * bf) / mu;
  const Vector e = params_.inv_rm * j - c.solve_mass_nedelec(mu * cross(uf, h));
  const Vector rhs = momentum_load(sources, t) + cross(uf, w) + params_.sc * mu * cross(j, h);
  const Vector p = c.solve_stiffness_lagrange(c.grad().transpose() * rhs);

  MhdState s;
  s.t = t;
  s.params = params_;
  s.u = c.from_free(n, uf);
  s.omega = c.from_free(n, w);
  s.j = c.from_free(n, j);
  s.E = c.from_free(n, e);
  s.H = c.from_free(n, h);
  s.B = c.from_free(c.rt(), bf);
  s.P = c.from_free(c.lagrange(), p);
  return s;
}

MhdState MhdSolver::zero_state(double t0) const {
  const auto& c = *ctx_;
  MhdState s;
  s.t = t0;
  s.params = params_;
  s.u = s.omega = s.j = s.E = s.H = FieldVector(c.nedelec());
  s.B = FieldVector(c.rt());
  s.P = FieldVector(c.lagrange());
  return s;
}

MhdState MhdSolver::init_state(const AnalyticField& u0, const AnalyticField& b0, const SourceTerms& sources,
                               double t0) const {
  const auto& c = *ctx_;
  // The divergence of B0 is measured on a high-order face interpolant so
  // that quadrature error does not mask or fake a violation. Coarse meshes
  // have large faces and get a proportionally higher degree.
  const int degree = 24 * std::max(1, static_cast<int>(std::ceil(2.0 * c.mesh().h())));
  const FieldVector bi = interpolate_rt(c.rt(), b0, t0, Boundary::Keep, degree);
  const Vector flux = incidence(c.mesh(), 2).cast<double>() * bi.coeffs;
  const double scale = std::max(1.0, max_abs(bi.coeffs));
  const double div = max_abs(flux) / scale;
  if (div > 1e-10) {
    std::ostringstream msg;
    msg << "initial magnetic field is not divergence free (relative max cell flux " << div << ")";
    throw DivergenceError(msg.str(), div);
  }

  // Nedelec interpolant, then remove its discrete gradient part so that
  // (u, grad Q) = 0 holds for all Q at t0.
  const Vector ui = c.nedelec().restrict(interpolate_nedelec(c.nedelec(), u0, t0, Boundary::Zero).coeffs);
  const Vector phi = c.solve_stiffness_lagrange(c.grad().transpose() * (c.mass_nedelec() * ui));
  const Vector u = ui - c.grad() * phi;

  const FieldVector b = c.pi_tilde_rt(b0, t0);
  return recover(c.from_free(c.nedelec(), u), b, t0, sources);
}

StepResult MhdSolver::step_midpoint(const MhdState& state, double dt, const SourceTerms& sources) const {
  return solve_nonlinear(state, dt, options_.tol, options_.scheme, sources);
}

StepResult MhdSolver::solve_nonlinear(const MhdState& state, double dt, double tol, NonlinearScheme scheme,
                                      const SourceTerms& sources) const {
  if (!(dt > 0.0) || !std::isfinite(dt)) throw InvalidArgument("time step must be positive");
  const Layout L{nn_, nr_, nl_};
  const auto& c = *ctx_;
  const double tm = state.t + 0.5 * dt;
  const Vector u0 = c.free(state.u);
  const Vector b0 = c.free(state.B);
  const Vector f = momentum_load(sources, tm);
  const Vector g = faraday_load(sources, tm);

  Vector x(L.size());
  x.segment(L.u(), nn_) = u0;
  x.segment(L.w(), nn_) = c.free(state.omega);
  x.segment(L.j(), nn_) = c.free(state.j);
  x.segment(L.e(), nn_) = c.free(state.E);
  x.segment(L.h(), nn_) = c.free(state.H);
  x.segment(L.b(), nr_) = b0;
  x.segment(L.p(), nl_) = c.free(state.P);

  NonlinearReport report;
  JacobianCache& cache = *cache_;
  if (!options_.reuse_jacobian) cache.valid = false;
  Vector r = residual(x, u0, b0, dt, f, g);
  double res = max_abs(r);
  report.residuals.push_back(res);
  int growth = 0;
  bool use_newton = scheme == NonlinearScheme::Newton;
  bool refresh = !options_.reuse_jacobian;
  for (int it = 0; it < options_.max_iterations; ++it) {
    if (res <= tol) {
      report.converged = true;
      break;
    }
    if (!std::isfinite(res)) break;
    if (scheme == NonlinearScheme::PicardThenNewton && res < options_.newton_switch) use_newton = true;
    // A cached Newton Jacobian from earlier steps beats a fresh Picard one.
    if (scheme == NonlinearScheme::PicardThenNewton && options_.reuse_jacobian && cache.valid && cache.newton)
      use_newton = true;
    const bool fresh = refresh || !cache.valid || cache.newton != use_newton;
    if (fresh) {
      cache.lu.factorize(jacobian(x, u0, dt, use_newton));
      cache.valid = true;
      cache.newton = use_newton;
      ++report.factorizations;
    }
    refresh = !options_.reuse_jacobian;
    x -= cache.lu.solve(r);
    report.newton.push_back(use_newton);
    ++report.iterations;
    r = residual(x, u0, b0, dt, f, g);
    const double next = max_abs(r);
    report.residuals.push_back(next);
    const double ratio = res > 0.0 ? next / res : 0.0;
    if (ratio > options_.max_contraction && !fresh) {
      // A stale factorisation stopped paying off; rebuild it.
      refresh = true;
      res = next;
      continue;
    }
    growth = next > res ? growth + 1 : 0;
    // Round-off floor: the exact Jacobian can no longer reduce a residual
    // this small.
    if (next > tol && fresh && use_newton && next <= 1e3 * tol && ratio >= 0.5) {
      res = next;
      report.converged = true;
      break;
    }
    res = next;
    if (growth >= 5) break;
  }
  if (!report.converged && res <= tol) report.converged = true;
  if (!report.converged) {
    std::ostringstream msg;
    msg << "nonlinear iteration failed at t = " << state.t << " after " << report.iterations
        << " iterations (residual " << res << ")";
    throw NonlinearSolveError(msg.str(), report.iterations, res);
  }

  // Faraday's law is linear in E; recomputing B from it removes the solver
  // residual from the flux balance, so div B stays at round-off.
  const Vector e = x.segment(L.e(), nn_);
  const Vector b1 = b0 - dt * (c.curl() * e) + dt * g;
  const Vector u1 = x.segment(L.u(), nn_);

  const Space& n = c.nedelec();
  StepResult out;
  out.report = std::move(report);
  out.momentum_load = f;
  out.faraday_load = g;
  out.mid.t = tm;
  out.mid.u = c.from_free(n, 0.5 * (u0 + u1));
  out.mid.omega = c.from_free(n, x.segment(L.w(), nn_));
  out.mid.j = c.from_free(n, x.segment(L.j(), nn_));
  out.mid.E = c.from_free(n, e);
  out.mid.H = c.from_free(n, x.segment(L.h(), nn_));
  out.mid.B = c.from_free(c.rt(), 0.5 * (b0 + b1));
  out.mid.P = c.from_free(c.lagrange(), x.segment(L.p(), nl_));
  out.state = recover(c.from_free(n, u1), c.from_free(c.rt(), b1), state.t + dt, sources);
  return out;
}

Vector MhdSolver::midpoint_residual(const MhdState& prev, const MhdState& next, const MidpointFields& mid,
                                    double dt, const SourceTerms& sources) const {
  const Layout L{nn_, nr_, nl_};
  const auto& c = *ctx_;
  Vector x(L.size());
  x.segment(L.u(), nn_) = c.free(next.u);
  x.segment(L.w(), nn_) = c.free(mid.omega);
  x.segment(L.j(), nn_) = c.free(mid.j);
  x.segment(L.e(), nn_) = c.free(mid.E);
  x.segment(L.h(), nn_) = c.free(mid.H);
  x.segment(L.b(), nr_) = c.free(next.B);
  x.segment(L.p(), nl_) = c.free(mid.P);
  const double tm = prev.t + 0.5 * dt;
  return residual(x, c.free(prev.u), c.free(prev.B), dt, momentum_load(sources, tm), faraday_load(sources, tm));
}

ConsistencyReport MhdSolver::reduced_consistency_check(const MhdState& s) const {
  const auto& c = *ctx_;
  const double mu = params_.mu;
  const Vector u = c.free(s.u);
  const Vector b = c.free(s.B);
  const Vector w = c.free(s.omega);
  const Vector j = c.free(s.j);
  const Vector e = c.free(s.E);
  const Vector h = c.free(s.H);
  const SparseMatrix& mn = c.mass_nedelec();
  auto norm_n = [&](const Vector& v) { return std::sqrt(std::max(0.0, v.dot(mn * v))); };

  ConsistencyReport rep;
  const Vector quh = c.solve_mass_nedelec(mu * cross(u, h));
  rep.ohm = norm_n(e - (params_.inv_rm * j - quh));
  rep.vorticity = norm_n(w - c.solve_mass_nedelec(c.mixed_mass() * (c.curl() * u)));
  rep.ampere = norm_n(mu * j - c.solve_mass_nedelec(c.curl().transpose() * (c.mass_rt() * b)));
  rep.constitutive = norm_n(mu * h - c.solve_mass_nedelec(c.mixed_mass() * b));
  if (params_.inv_rm > 0.0) {
    const Vector qb = c.solve_mass_nedelec(c.mixed_mass() * b);
    rep.explicit_current = norm_n(j - (e + c.solve_mass_nedelec(cross(u, qb))) / params_.inv_rm);
  }
  rep.divergence = c.divergence_norm(s.B);
  return rep;
}

}  // namespace smhd
