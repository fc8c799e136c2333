#include "smhd/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <ostream>

namespace smhd {

namespace {

double relative(double residual, std::initializer_list<double> terms, double quantity) {
  double scale = std::abs(quantity);
  for (double t : terms) scale = std::max(scale, std::abs(t));
  if (scale == 0.0) return std::abs(residual);
  return std::abs(residual) / scale;
}

}  // namespace

double energy(const OperatorContext& ctx, const PhysParams& params, const FieldVector& u, const FieldVector& b) {
  const Vector uf = ctx.free(u);
  const Vector bf = ctx.free(b);
  return 0.5 * uf.dot(ctx.mass_nedelec() * uf) + params.sc / (2.0 * params.mu) * bf.dot(ctx.mass_rt() * bf);
}

double magnetic_helicity(const OperatorContext& ctx, const FieldVector& b, Gauge gauge) {
  const FieldVector a = ctx.vector_potential(b, gauge);
  return ctx.inner(a, b);
}

double cross_helicity(const OperatorContext& ctx, const FieldVector& u, const FieldVector& b) {
  return ctx.inner(u, b);
}

StepBalance step_balance(const MhdSolver& solver, const MhdState& prev, const StepResult& step, double dt) {
  const OperatorContext& c = solver.context();
  const PhysParams& p = solver.params();
  const MhdState& next = step.state;
  const Vector um = c.free(step.mid.u);
  const Vector bm = c.free(step.mid.B);
  const Vector& f = step.momentum_load;
  const Vector& g = step.faraday_load;
  const SparseMatrix& mn = c.mass_nedelec();
  const SparseMatrix& mr = c.mass_rt();
  const SparseMatrix& x = c.mixed_mass();

  const Vector curl_u = c.curl() * um;
  const Vector curl_h_b = c.solve_mass_nedelec(c.curl().transpose() * (mr * bm));  // mu j_m
  const Vector jm = curl_h_b / p.mu;
  const Vector qb = c.solve_mass_nedelec(x * bm);
  const FieldVector am = c.vector_potential(step.mid.B);
  const Vector a = c.free(am);

  StepBalance s;
  const double e0 = energy(c, prev);
  const double e1 = energy(c, next);
  s.energy_rate = (e1 - e0) / dt;
  s.viscous_dissipation = p.inv_re * curl_u.dot(mr * curl_u);
  s.ohmic_dissipation = p.sc * p.inv_rm * jm.dot(mn * jm);
  s.work = f.dot(um) + p.sc / p.mu * g.dot(mr * bm);
  const double eres = s.energy_rate + s.viscous_dissipation + s.ohmic_dissipation - s.work;
  s.energy_residual = relative(eres, {s.energy_rate, s.viscous_dissipation, s.ohmic_dissipation, s.work}, e1);

  const double hm0 = magnetic_helicity(c, prev.B);
  const double hm1 = magnetic_helicity(c, next.B);
  s.magnetic_helicity_rate = (hm1 - hm0) / dt;
  const double hm_diss = 2.0 * p.inv_rm / p.mu * qb.dot(mn * curl_h_b);
  const double hm_src = 2.0 * a.dot(x * g);
  s.magnetic_helicity_source = hm_src - hm_diss;
  // |(A, B)| <= ||A|| ||B|| sets the size of the helicities when they are
  // themselves close to zero.
  const double bnorm = std::sqrt(std::max(0.0, bm.dot(mr * bm)));
  const double hm_size = std::max(std::abs(hm1), std::sqrt(std::max(0.0, a.dot(mn * a))) * bnorm);
  s.helicity_rate_residual_m = relative(s.magnetic_helicity_rate - s.magnetic_helicity_source,
                                        {s.magnetic_helicity_rate, hm_diss, hm_src}, hm_size);

  const double hc0 = cross_helicity(c, prev.u, prev.B);
  const double hc1 = cross_helicity(c, next.u, next.B);
  s.cross_helicity_rate = (hc1 - hc0) / dt;
  const double hc_visc = p.inv_re * um.dot(c.curl_curl() * qb);
  const double hc_ohm = p.inv_rm / p.mu * curl_h_b.dot(x * curl_u);
  const double hc_f = f.dot(qb);
  const double hc_g = um.dot(x * g);
  s.cross_helicity_source = -hc_visc - hc_ohm + hc_f + hc_g;
  const double hc_size = std::max(std::abs(hc1), std::sqrt(std::max(0.0, um.dot(mn * um))) * bnorm);
  s.helicity_rate_residual_c = relative(s.cross_helicity_rate - s.cross_helicity_source,
                                        {s.cross_helicity_rate, hc_visc, hc_ohm, hc_f, hc_g}, hc_size);
  return s;
}

void write_state_vtk(std::ostream& os, const OperatorContext& ctx, const MhdState& s) {
  const TetMesh& mesh = ctx.mesh();
  const Vec3 centroid = Vec3::Constant(0.25);
  std::vector<std::pair<std::string, std::vector<Vec3>>> cells;
  for (const auto& [name, f] : {std::pair<const char*, const FieldVector*>{"u", &s.u}, {"omega", &s.omega},
                                {"j", &s.j}, {"E", &s.E}, {"H", &s.H}, {"B", &s.B}}) {
    std::vector<Vec3> v(mesh.cells().size());
    for (std::size_t c = 0; c < v.size(); ++c) v[c] = evaluate(*f, c, centroid);
    cells.emplace_back(name, std::move(v));
  }
  std::vector<double> p(s.P.coeffs.data(), s.P.coeffs.data() + s.P.coeffs.size());
  write_vtk(os, mesh, {}, {{"P", std::move(p)}}, cells);
}

void write_csv_header(std::ostream& os) {
  os << "step,t,energy,viscous_dissipation,ohmic_dissipation,work,magnetic_helicity,cross_helicity,"
        "div_B_max,energy_residual,helicity_rate_residual_m,helicity_rate_residual_c\n";
}

void write_csv_row(std::ostream& os, const DiagnosticsRow& r) {
  const auto old = os.precision(17);
  os << r.step << ',' << r.t << ',' << r.energy << ',' << r.viscous_dissipation << ',' << r.ohmic_dissipation << ','
     << r.work << ',' << r.magnetic_helicity << ',' << r.cross_helicity << ',' << r.div_B_max << ','
     << r.energy_residual << ',' << r.helicity_rate_residual_m << ',' << r.helicity_rate_residual_c << '\n';
  os.precision(old);
}

ConservationTracker::ConservationTracker(const MhdSolver& solver, bool check_gauge)
    : solver_(&solver), check_gauge_(check_gauge) {}

DiagnosticsRow ConservationTracker::level_row(int step, const MhdState& s) {
  const OperatorContext& c = solver_->context();
  DiagnosticsRow r;
  r.step = step;
  r.t = s.t;
  r.energy = energy(c, s);
  r.magnetic_helicity = magnetic_helicity(c, s.B);
  r.cross_helicity = cross_helicity(c, s.u, s.B);
  r.div_B_max = c.divergence_norm(s.B);
  report_.max_divergence = std::max(report_.max_divergence, r.div_B_max);
  if (check_gauge_) {
    const FieldVector a = c.vector_potential(s.B, Gauge::CoefficientOrthogonal);
    const double other = c.inner(a, s.B);
    const double scale = std::max({std::abs(r.magnetic_helicity), c.l2_norm(a) * c.l2_norm(s.B), 1e-300});
    report_.gauge_difference = std::max(report_.gauge_difference, std::abs(other - r.magnetic_helicity) / scale);
  }
  return r;
}

void ConservationTracker::start(const MhdState& initial) {
  rows_.clear();
  report_ = ConservationReport{};
  rows_.push_back(level_row(0, initial));
  e0_ = rows_.back().energy;
  hm0_ = rows_.back().magnetic_helicity;
  hc0_ = rows_.back().cross_helicity;
}

const DiagnosticsRow& ConservationTracker::record(const MhdState& prev, const StepResult& step, double dt) {
  DiagnosticsRow r = level_row(static_cast<int>(rows_.size()), step.state);
  const StepBalance b = step_balance(*solver_, prev, step, dt);
  r.viscous_dissipation = b.viscous_dissipation;
  r.ohmic_dissipation = b.ohmic_dissipation;
  r.work = b.work;
  r.energy_residual = b.energy_residual;
  r.helicity_rate_residual_m = b.helicity_rate_residual_m;
  r.helicity_rate_residual_c = b.helicity_rate_residual_c;

  ConservationReport& rep = report_;
  rep.steps = r.step;
  const double escale = std::abs(e0_) > 0.0 ? std::abs(e0_) : 1.0;
  rep.energy_drift = std::max(rep.energy_drift, std::abs(r.energy - e0_) / escale);
  rep.magnetic_helicity_drift =
      std::max(rep.magnetic_helicity_drift, std::abs(r.magnetic_helicity - hm0_) / std::max(std::abs(hm0_), escale));
  rep.cross_helicity_drift =
      std::max(rep.cross_helicity_drift, std::abs(r.cross_helicity - hc0_) / std::max(std::abs(hc0_), escale));
  rep.max_energy_residual = std::max(rep.max_energy_residual, r.energy_residual);
  rep.max_helicity_residual_m = std::max(rep.max_helicity_residual_m, r.helicity_rate_residual_m);
  rep.max_helicity_residual_c = std::max(rep.max_helicity_residual_c, r.helicity_rate_residual_c);
  rows_.push_back(r);
  return rows_.back();
}

}  // namespace smhd
