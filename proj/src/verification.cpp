#include "smhd/verification.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <ostream>
#include <random>

#include "case_fields.hpp"
#include "smhd/error.hpp"

namespace smhd {

namespace {

using Sampler = cases::CaseSample (*)(const Vec3&, double);

cases::CaseSample zero_sample(const Vec3&, double) { return {}; }

Sampler sampler_for(const std::string& name) {
  if (name == "decay-trig") return &cases::decay_trig;
  if (name == "static-B") return &cases::static_b;
  if (name == "helical") return &cases::helical;
  if (name == "zero") return &zero_sample;
  std::string known;
  for (const auto& n : case_names()) known += (known.empty() ? "" : ", ") + n;
  throw InvalidArgument("unknown manufactured case '" + name + "' (known: " + known + ")");
}

template <class Get>
AnalyticField::VecFn field_of(Sampler s, Get get) {
  return [s, get](const Vec3& x, double t) -> Vec3 { return get(s(x, t)); };
}

// Eighth-order central difference of a vector function along one axis
// (axis 3 is time).
constexpr double kFdStep = 3e-3;
constexpr double kFdWeights[4] = {4.0 / 5.0, -1.0 / 5.0, 4.0 / 105.0, -1.0 / 280.0};

template <class Fn>
Vec3 fd(const Fn& fn, const Vec3& x, double t, int axis) {
  Vec3 d = Vec3::Zero();
  for (int k = 1; k <= 4; ++k) {
    Vec3 xp = x, xm = x;
    double tp = t, tm = t;
    if (axis == 3) {
      tp += k * kFdStep;
      tm -= k * kFdStep;
    } else {
      xp[axis] += k * kFdStep;
      xm[axis] -= k * kFdStep;
    }
    d += kFdWeights[k - 1] * (fn(xp, tp) - fn(xm, tm));
  }
  return d / kFdStep;
}

template <class Fn>
Vec3 fd_curl(const Fn& fn, const Vec3& x, double t) {
  const Vec3 dx = fd(fn, x, t, 0), dy = fd(fn, x, t, 1), dz = fd(fn, x, t, 2);
  return {dy.z() - dz.y(), dz.x() - dx.z(), dx.y() - dy.x()};
}

template <class Fn>
double fd_div(const Fn& fn, const Vec3& x, double t) {
  return fd(fn, x, t, 0).x() + fd(fn, x, t, 1).y() + fd(fn, x, t, 2).z();
}

double mismatch(const Vec3& approx, const Vec3& exact) {
  return (approx - exact).cwiseAbs().maxCoeff() / std::max(1.0, exact.cwiseAbs().maxCoeff());
}

// Errors at round-off on both levels mean the field is reproduced exactly;
// the rate is then reported as +inf.
constexpr double kExactError = 1e-12;

double rate(double e_prev, double e, double h_prev, double h) {
  if (std::isnan(e_prev) || std::isnan(e)) return std::numeric_limits<double>::quiet_NaN();
  if (e_prev <= kExactError && e <= kExactError) return std::numeric_limits<double>::infinity();
  if (e_prev <= 0.0 || e <= 0.0) return std::numeric_limits<double>::quiet_NaN();
  return std::log(e_prev / e) / std::log(h_prev / h);
}

}  // namespace

std::string ExactnessReport::describe() const {
  std::string s = "n = " + std::to_string(n) + ": ";
  if (ok()) return s + "exact";
  if (d1d0_nonzeros != 0) s += "D1*D0 has " + std::to_string(d1d0_nonzeros) + " nonzero entries; ";
  if (d2d1_nonzeros != 0) s += "D2*D1 has " + std::to_string(d2d1_nonzeros) + " nonzero entries; ";
  if (euler_characteristic != 1) s += "Euler characteristic " + std::to_string(euler_characteristic) + "; ";
  return s;
}

ExactnessReport check_exactness(const TetMesh& mesh, bool mutate) {
  const IncidenceMatrix d0 = incidence(mesh, 0);
  IncidenceMatrix d1 = incidence(mesh, 1);
  const IncidenceMatrix d2 = incidence(mesh, 2);
  if (mutate && d1.nonZeros() > 0) d1.valuePtr()[0] = -d1.valuePtr()[0];
  auto count = [](const IncidenceMatrix& m) {
    long long k = 0;
    for (Eigen::Index j = 0; j < m.outerSize(); ++j)
      for (IncidenceMatrix::InnerIterator it(m, j); it; ++it) k += it.value() != 0;
    return k;
  };
  ExactnessReport r;
  r.n = mesh.subdivisions();
  r.d1d0_nonzeros = count(IncidenceMatrix(d1 * d0));
  r.d2d1_nonzeros = count(IncidenceMatrix(d2 * d1));
  r.euler_characteristic = static_cast<long long>(mesh.vertices().size()) - static_cast<long long>(mesh.edges().size()) +
                           static_cast<long long>(mesh.faces().size()) - static_cast<long long>(mesh.cells().size());
  return r;
}

std::vector<std::string> case_names() { return {"decay-trig", "static-B", "helical", "zero"}; }

SourceTerms ManufacturedCase::sources() const {
  SourceTerms s;
  if (forced) {
    s.f = f;
    s.faraday_potential = faraday_potential;
  }
  return s;
}

ManufacturedCase build_case(const std::string& name, const PhysParams& params, bool self_check) {
  params.validate();
  const Sampler s = sampler_for(name);
  const double mu = params.mu, sc = params.sc, inv_re = params.inv_re, inv_rm = params.inv_rm;

  ManufacturedCase c;
  c.name = name;
  c.params = params;
  c.forced = name == "decay-trig" || name == "static-B";

  c.u.value = field_of(s, [](const cases::CaseSample& q) { return q.u; });
  c.u.curl = field_of(s, [](const cases::CaseSample& q) { return q.curl_u; });
  c.u.dt = field_of(s, [](const cases::CaseSample& q) { return q.dt_u; });
  c.u.div = [](const Vec3&, double) { return 0.0; };

  c.omega.value = c.u.curl;
  c.omega.curl = field_of(s, [](const cases::CaseSample& q) { return q.curlcurl_u; });

  c.A.value = field_of(s, [](const cases::CaseSample& q) { return q.A; });
  c.A.dt = field_of(s, [](const cases::CaseSample& q) { return q.dt_A; });
  c.A.curl = field_of(s, [](const cases::CaseSample& q) { return q.B; });

  c.B.value = c.A.curl;
  c.B.curl = field_of(s, [](const cases::CaseSample& q) { return q.curl_B; });
  c.B.dt = field_of(s, [](const cases::CaseSample& q) { return q.dt_B; });
  c.B.div = [](const Vec3&, double) { return 0.0; };

  c.j.value = field_of(s, [mu](const cases::CaseSample& q) { return Vec3(q.curl_B / mu); });
  c.j.curl = field_of(s, [mu](const cases::CaseSample& q) { return Vec3(q.curlcurl_B / mu); });

  auto e_of = [mu, inv_rm](const cases::CaseSample& q) -> Vec3 { return inv_rm * q.curl_B / mu - q.u.cross(q.B); };
  auto curl_e_of = [mu, inv_rm](const cases::CaseSample& q) -> Vec3 {
    return inv_rm * q.curlcurl_B / mu - q.curl_uxB;
  };
  c.E.value = field_of(s, e_of);
  c.E.curl = field_of(s, curl_e_of);

  c.P.value = [s](const Vec3& x, double t) { return s(x, t).P; };
  c.P.grad = field_of(s, [](const cases::CaseSample& q) { return q.grad_P; });

  if (c.forced) {
    c.f.value = field_of(s, [=](const cases::CaseSample& q) -> Vec3 {
      return q.dt_u - q.u.cross(q.curl_u) + inv_re * q.curlcurl_u - sc * (q.curl_B / mu).cross(q.B) + q.grad_P;
    });
    c.faraday_potential.value = field_of(s, [=](const cases::CaseSample& q) -> Vec3 { return q.dt_A + e_of(q); });
    c.faraday_potential.curl = field_of(s, [=](const cases::CaseSample& q) -> Vec3 { return q.dt_B + curl_e_of(q); });
  } else {
    c.f = AnalyticField::zero();
    c.faraday_potential = AnalyticField::zero();
  }

  if (self_check) {
    const double m = case_self_check(c);
    if (m > 1e-10) throw Error("manufactured case '" + name + "' fails its derivative self-check (mismatch " +
                              std::to_string(m) + ")");
  }
  return c;
}

double case_self_check(const ManufacturedCase& c, int samples, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> pos(0.1, 0.9), time(0.05, 1.0);
  double worst = 0.0;
  const auto& u = c.u.value;
  const auto& b = c.B.value;
  auto uxb = [&](const Vec3& x, double t) -> Vec3 { return u(x, t).cross(b(x, t)); };
  for (int i = 0; i < samples; ++i) {
    const Vec3 x(pos(rng), pos(rng), pos(rng));
    const double t = time(rng);
    worst = std::max(worst, mismatch(fd_curl(u, x, t), c.u.curl(x, t)));
    worst = std::max(worst, mismatch(fd_curl(c.omega.value, x, t), c.omega.curl(x, t)));
    worst = std::max(worst, mismatch(fd(u, x, t, 3), c.u.dt(x, t)));
    worst = std::max(worst, mismatch(fd_curl(c.A.value, x, t), b(x, t)));
    worst = std::max(worst, mismatch(fd(c.A.value, x, t, 3), c.A.dt(x, t)));
    worst = std::max(worst, mismatch(fd_curl(b, x, t), c.B.curl(x, t)));
    worst = std::max(worst, mismatch(fd(b, x, t, 3), c.B.dt(x, t)));
    worst = std::max(worst, mismatch(fd_curl(c.j.value, x, t), c.j.curl(x, t)));
    worst = std::max(worst, mismatch(fd_curl(c.E.value, x, t), c.E.curl(x, t)));
    worst = std::max(worst, mismatch(fd_curl(uxb, x, t), -c.E.curl(x, t) + c.params.inv_rm * c.j.curl(x, t)));
    auto p3 = [&](const Vec3& y, double s) -> Vec3 { return Vec3::Constant(c.P.value(y, s)); };
    const Vec3 gp(fd(p3, x, t, 0).x(), fd(p3, x, t, 1).x(), fd(p3, x, t, 2).x());
    worst = std::max(worst, mismatch(gp, c.P.grad(x, t)));
    worst = std::max(worst, std::abs(fd_div(u, x, t)) / std::max(1.0, u(x, t).norm()));
    worst = std::max(worst, std::abs(fd_div(b, x, t)) / std::max(1.0, b(x, t).norm()));
    if (c.forced) {
      const auto& psi = c.faraday_potential;
      worst = std::max(worst, mismatch(fd_curl(psi.value, x, t), psi.curl(x, t)));
    }
  }
  return worst;
}

std::vector<std::vector<double>> EocTable::rates() const {
  std::vector<std::vector<double>> r;
  for (std::size_t l = 1; l < errors.size(); ++l) {
    std::vector<double> row;
    for (std::size_t c = 0; c < columns.size(); ++c) row.push_back(rate(errors[l - 1][c], errors[l][c], h[l - 1], h[l]));
    r.push_back(row);
  }
  return r;
}

double EocTable::min_rate() const {
  double m = std::numeric_limits<double>::infinity();
  for (const auto& row : rates())
    for (double v : row) m = std::isnan(v) ? -std::numeric_limits<double>::infinity() : std::min(m, v);
  return m;
}

void EocTable::write_csv(std::ostream& os) const {
  os << "n,h";
  for (const auto& c : columns) os << ',' << c << ',' << c << "_eoc";
  os << '\n';
  const auto r = rates();
  const auto old = os.precision(17);
  for (std::size_t l = 0; l < errors.size(); ++l) {
    os << n[l] << ',' << h[l];
    for (std::size_t c = 0; c < columns.size(); ++c) {
      os << ',' << errors[l][c] << ',';
      if (l > 0) os << r[l - 1][c];
    }
    os << '\n';
  }
  os.precision(old);
}

void EocTable::write_text(std::ostream& os) const {
  const auto r = rates();
  os << std::setw(4) << "n" << std::setw(11) << "h";
  std::vector<int> width;
  for (const auto& c : columns) width.push_back(std::max<int>(14, static_cast<int>(c.size()) + 2));
  for (std::size_t c = 0; c < columns.size(); ++c) os << std::setw(width[c]) << columns[c] << std::setw(7) << "eoc";
  os << '\n';
  for (std::size_t l = 0; l < errors.size(); ++l) {
    os << std::setw(4) << n[l] << std::setw(11) << std::setprecision(4) << h[l];
    for (std::size_t c = 0; c < columns.size(); ++c) {
      os << std::setw(width[c]) << std::scientific << std::setprecision(4) << errors[l][c] << std::defaultfloat;
      if (l > 0)
        os << std::setw(7) << std::fixed << std::setprecision(2) << r[l - 1][c] << std::defaultfloat;
      else
        os << std::setw(7) << "-";
    }
    os << '\n';
  }
}

EocTable run_convergence(const ManufacturedCase& c, const ConvergenceOptions& options) {
  if (options.levels.size() < 2) throw InvalidArgument("convergence study needs at least two levels");
  if (!(options.final_time > 0.0) || !(options.dt_factor > 0.0))
    throw InvalidArgument("final time and dt factor must be positive");
  EocTable table;
  table.columns = {"u_L2", "B_L2", "curl_u_L2L2", "j_L2L2"};
  const SourceTerms src = c.sources();
  for (int n : options.levels) {
    const TetMesh mesh = build_box_mesh(n);
    const OperatorContext ctx(mesh, 0, {}, options.solver.exec);
    const MhdSolver solver(ctx, c.params, options.solver);
    MhdState state = solver.init_state(c.u, c.B, src, 0.0);
    const double h = mesh.h();
    const int steps = std::max(1, static_cast<int>(std::ceil(options.final_time / (options.dt_factor * h * h) - 1e-9)));
    const double dt = options.final_time / steps;
    double curl_sq = 0.0, j_sq = 0.0;
    for (int s = 0; s < steps; ++s) {
      StepResult r = solver.step_midpoint(state, dt, src);
      const double ec = curl_error(r.mid.u, c.u, r.mid.t);
      const double ej = l2_error(r.mid.j, c.j, r.mid.t);
      curl_sq += dt * ec * ec;
      j_sq += dt * ej * ej;
      state = std::move(r.state);
    }
    table.n.push_back(n);
    table.h.push_back(h);
    table.errors.push_back({l2_error(state.u, c.u, state.t), l2_error(state.B, c.B, state.t), std::sqrt(curl_sq),
                            std::sqrt(j_sq)});
  }
  return table;
}

ScalarField smooth_scalar() {
  ScalarField p;
  p.value = [](const Vec3& x, double) { return std::sin(M_PI * x.x()) * std::sin(M_PI * x.y()) * std::sin(M_PI * x.z()); };
  p.grad = [](const Vec3& x, double) -> Vec3 {
    const double sx = std::sin(M_PI * x.x()), sy = std::sin(M_PI * x.y()), sz = std::sin(M_PI * x.z());
    const double cx = std::cos(M_PI * x.x()), cy = std::cos(M_PI * x.y()), cz = std::cos(M_PI * x.z());
    return M_PI * Vec3(cx * sy * sz, sx * cy * sz, sx * sy * cz);
  };
  return p;
}

AnalyticField smooth_edge_field() { return commuting_fields().front(); }

AnalyticField smooth_divfree_field() {
  AnalyticField b;
  b.value = [](const Vec3& x, double) { return cases::helical(x, 0.0).B; };
  b.curl = [](const Vec3& x, double) { return cases::helical(x, 0.0).curl_B; };
  b.div = [](const Vec3&, double) { return 0.0; };
  return b;
}

std::vector<AnalyticField> commuting_fields() {
  std::vector<AnalyticField> out(5);
  out[0].value = [](const Vec3& x, double) -> Vec3 {
    const double sx = std::sin(M_PI * x.x()), sy = std::sin(M_PI * x.y()), sz = std::sin(M_PI * x.z());
    return {sy * sz, sz * sx, sx * sy};
  };
  out[0].curl = [](const Vec3& x, double) -> Vec3 {
    const double sx = std::sin(M_PI * x.x()), sy = std::sin(M_PI * x.y()), sz = std::sin(M_PI * x.z());
    const double cx = std::cos(M_PI * x.x()), cy = std::cos(M_PI * x.y()), cz = std::cos(M_PI * x.z());
    return M_PI * Vec3(sx * (cy - cz), sy * (cz - cx), sz * (cx - cy));
  };
  out[1].value = [](const Vec3& x, double) -> Vec3 {
    return {x.y() * x.z(), -x.x() * x.z() * x.z(), x.x() * x.y()};
  };
  out[1].curl = [](const Vec3& x, double) -> Vec3 {
    return {x.x() + 2.0 * x.x() * x.z(), 0.0, -x.z() * x.z() - x.z()};
  };
  out[2].value = [](const Vec3& x, double) -> Vec3 {
    return {std::exp(x.x()) * std::sin(x.y()), x.x() * std::cos(x.z()), x.y() * x.y() * x.z()};
  };
  out[2].curl = [](const Vec3& x, double) -> Vec3 {
    return {2.0 * x.y() * x.z() + x.x() * std::sin(x.z()), 0.0, std::cos(x.z()) - std::exp(x.x()) * std::cos(x.y())};
  };
  out[3].value = [](const Vec3& x, double) -> Vec3 {
    return {std::cos(M_PI * x.x()) * std::sin(M_PI * x.y()), x.z(), x.x() * x.y() * x.z()};
  };
  out[3].curl = [](const Vec3& x, double) -> Vec3 {
    return {x.x() * x.z() - 1.0, -x.y() * x.z(), -M_PI * std::cos(M_PI * x.x()) * std::cos(M_PI * x.y())};
  };
  out[4].value = [](const Vec3& x, double) -> Vec3 {
    return {std::sin(x.x() + 2.0 * x.y()), std::cos(x.y() - x.z()), x.x() * x.z()};
  };
  out[4].curl = [](const Vec3& x, double) -> Vec3 {
    return {-std::sin(x.y() - x.z()), -x.z(), -2.0 * std::cos(x.x() + 2.0 * x.y())};
  };
  return out;
}

OperatorRates run_operator_rates(const std::vector<int>& levels, Exec exec) {
  if (levels.size() < 2) throw InvalidArgument("operator rates need at least two levels");
  OperatorRates out;
  EocTable& t = out.table;
  t.columns = {"lagrange_interp", "nedelec_interp", "rt_interp", "q_h", "pi_n", "curl_pi_n", "pi_tilde_rt"};
  const ScalarField p = smooth_scalar();
  const AnalyticField e = smooth_edge_field();
  const AnalyticField b = smooth_divfree_field();
  auto rel_diff = [](const Vector& a, const Vector& ref) {
    const double scale = std::max(ref.cwiseAbs().maxCoeff(), 1e-300);
    return (a - ref).cwiseAbs().maxCoeff() / scale;
  };
  for (int n : levels) {
    const TetMesh mesh = build_box_mesh(n);
    const OperatorContext ctx(mesh, 0, {}, exec);
    const FieldVector pl = interpolate_lagrange(ctx.lagrange(), p, 0.0, Boundary::Zero);
    const FieldVector en = interpolate_nedelec(ctx.nedelec(), e, 0.0, Boundary::Zero);
    const FieldVector br = interpolate_rt(ctx.rt(), b, 0.0, Boundary::Zero);
    const FieldVector q = ctx.q_h_project(e);
    const FieldVector pn = ctx.pi_n(e).field;
    const FieldVector prt = ctx.pi_tilde_rt(b);
    t.n.push_back(n);
    t.h.push_back(mesh.h());
    t.errors.push_back({l2_error(pl, p, 0.0), l2_error(en, e, 0.0), l2_error(br, b, 0.0), l2_error(q, e, 0.0),
                        l2_error(pn, e, 0.0), curl_error(pn, e, 0.0), l2_error(prt, b, 0.0)});
    out.idempotence = std::max({out.idempotence, rel_diff(ctx.q_h_project(q).coeffs, q.coeffs),
                                rel_diff(ctx.pi_n(pn).field.coeffs, pn.coeffs),
                                rel_diff(ctx.pi_tilde_rt(prt).coeffs, prt.coeffs)});
    out.max_commuting = std::max(out.max_commuting, ctx.commuting_check(e));
  }
  return out;
}

}  // namespace smhd
