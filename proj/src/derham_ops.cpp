#include "smhd/derham_ops.hpp"

#include <cmath>

#include "smhd/error.hpp"

namespace smhd {

namespace {

void append_block(std::vector<Triplet>& t, const SparseMatrix& m, Eigen::Index row0, Eigen::Index col0) {
  for (Eigen::Index k = 0; k < m.outerSize(); ++k)
    for (SparseMatrix::InnerIterator it(m, k); it; ++it)
      t.emplace_back(static_cast<int>(row0 + it.row()), static_cast<int>(col0 + it.col()), it.value());
}

// [tl, tr; bl, 0]
SparseMatrix saddle_matrix(const SparseMatrix& tl, const SparseMatrix& tr, const SparseMatrix& bl) {
  const Eigen::Index n = tl.rows() + bl.rows();
  std::vector<Triplet> t;
  t.reserve(static_cast<std::size_t>(tl.nonZeros() + tr.nonZeros() + bl.nonZeros()));
  append_block(t, tl, 0, 0);
  append_block(t, tr, 0, tl.cols());
  append_block(t, bl, tl.rows(), 0);
  SparseMatrix m(n, n);
  m.setFromTriplets(t.begin(), t.end());
  m.makeCompressed();
  return m;
}

Vector signs_of(const Space& s) {
  Vector v(static_cast<Eigen::Index>(s.num_dofs()));
  for (std::size_t i = 0; i < s.num_dofs(); ++i) v[static_cast<Eigen::Index>(i)] = s.entity_sign(i);
  return v;
}

SparseMatrix reduce(const SparseMatrix& m, const Space& rows, const Space& cols) {
  SparseMatrix r = rows.restriction() * m * cols.restriction().transpose();
  r.makeCompressed();
  return r;
}

}  // namespace

OperatorContext::OperatorContext(const TetMesh& mesh, int order, Orientation orientation, Exec exec)
    : mesh_(&mesh),
      order_(order),
      lagrange_(mesh, SpaceKind::Lagrange, order),
      nedelec_(mesh, SpaceKind::Nedelec, order, std::move(orientation.edge_signs)),
      rt_(mesh, SpaceKind::RaviartThomas, order, std::move(orientation.face_signs)),
      dg_(mesh, SpaceKind::DG, order) {
  ml_ = reduce(mass_matrix(lagrange_, -1, exec), lagrange_, lagrange_);
  mn_ = reduce(mass_matrix(nedelec_, -1, exec), nedelec_, nedelec_);
  mr_ = reduce(mass_matrix(rt_, -1, exec), rt_, rt_);
  x_ = reduce(mixed_mass_matrix(nedelec_, rt_, -1, exec), nedelec_, rt_);
  a_ = reduce(curl_curl_matrix(nedelec_, -1, exec), nedelec_, nedelec_);
  kl_ = reduce(lagrange_stiffness(lagrange_, -1, exec), lagrange_, lagrange_);

  const Vector sn = signs_of(nedelec_);
  const Vector sr = signs_of(rt_);
  const SparseMatrix d0 = incidence(mesh, 0).cast<double>();
  const SparseMatrix d1 = incidence(mesh, 1).cast<double>();
  const SparseMatrix d2 = incidence(mesh, 2).cast<double>();
  g_ = reduce(SparseMatrix(sn.asDiagonal() * d0), nedelec_, lagrange_);
  c_ = reduce(SparseMatrix(sr.asDiagonal() * d1 * sn.asDiagonal()), rt_, nedelec_);
  d_ = SparseMatrix(d2 * sr.asDiagonal()) * rt_.restriction().transpose();
  d_.makeCompressed();

  mn_solver_ = SparseCholesky(mn_, "Nedelec mass");
  mr_solver_ = SparseCholesky(mr_, "RT mass");
  kl_solver_ = SparseCholesky(kl_, "Lagrange stiffness");

  const SparseMatrix mng = mn_ * g_;
  curl_saddle_ = SparseLu(saddle_matrix(a_, mng, SparseMatrix(mng.transpose())), "curl saddle");
  curl_saddle_plain_ = SparseLu(saddle_matrix(a_, g_, SparseMatrix(g_.transpose())), "curl saddle (coefficient gauge)");

  // The flux constraints of all cells sum to zero on H_0(div); drop cell 0.
  const Eigen::Index nc = d_.rows();
  SparseMatrix dp = d_.bottomRows(nc - 1);
  div_saddle_ = SparseLu(saddle_matrix(mr_, SparseMatrix(dp.transpose()), dp), "div-free saddle");
}

Vector OperatorContext::saddle_solve(const SparseLu& lu, const Vector& top, const Vector& bottom, Vector* multiplier) const {
  Vector rhs(top.size() + bottom.size());
  rhs << top, bottom;
  const Vector sol = lu.solve(rhs);
  if (multiplier != nullptr) *multiplier = sol.tail(bottom.size());
  return sol.head(top.size());
}

FieldVector OperatorContext::q_h_project(const AnalyticField& v, double t) const {
  const Vector rhs = nedelec_.restrict(load_vector(nedelec_, v, t));
  return from_free(nedelec_, solve_mass_nedelec(rhs));
}

FieldVector OperatorContext::q_h_project(const FieldVector& v) const {
  if (v.space->kind() == SpaceKind::Nedelec) return from_free(nedelec_, solve_mass_nedelec(mn_ * free(v)));
  if (v.space->kind() == SpaceKind::RaviartThomas) return from_free(nedelec_, solve_mass_nedelec(x_ * free(v)));
  throw InvalidArgument("q_h_project: input must be a Nedelec or RT field");
}

FieldVector OperatorContext::curl_h(const FieldVector& b) const {
  if (b.space->kind() != SpaceKind::RaviartThomas) throw InvalidArgument("curl_h: input must be an RT field");
  return from_free(nedelec_, solve_mass_nedelec(c_.transpose() * (mr_ * free(b))));
}

PiNResult OperatorContext::pi_n(const AnalyticField& e, double t) const {
  if (!e.curl) throw InvalidArgument("pi_n: analytic field needs a curl");
  AnalyticField curl_e;
  curl_e.value = e.curl;
  const Vector top = c_.transpose() * rt_.restrict(load_vector(rt_, curl_e, t));
  const Vector bottom = g_.transpose() * nedelec_.restrict(load_vector(nedelec_, e, t));
  Vector mult;
  const Vector sol = saddle_solve(curl_saddle_, top, bottom, &mult);
  return {from_free(nedelec_, sol), from_free(lagrange_, mult)};
}

PiNResult OperatorContext::pi_n(const FieldVector& e) const {
  if (e.space->kind() != SpaceKind::Nedelec) throw InvalidArgument("pi_n: input must be a Nedelec field");
  const Vector ef = free(e);
  Vector mult;
  const Vector sol = saddle_solve(curl_saddle_, a_ * ef, g_.transpose() * (mn_ * ef), &mult);
  return {from_free(nedelec_, sol), from_free(lagrange_, mult)};
}

FieldVector OperatorContext::pi_tilde_rt(const AnalyticField& b, double t) const {
  const Vector rhs = rt_.restrict(load_vector(rt_, b, t));
  return from_free(rt_, saddle_solve(div_saddle_, rhs, Vector::Zero(d_.rows() - 1), nullptr));
}

FieldVector OperatorContext::pi_tilde_rt(const FieldVector& b) const {
  if (b.space->kind() != SpaceKind::RaviartThomas) throw InvalidArgument("pi_tilde_rt: input must be an RT field");
  return from_free(rt_, saddle_solve(div_saddle_, mr_ * free(b), Vector::Zero(d_.rows() - 1), nullptr));
}

FieldVector OperatorContext::vector_potential(const FieldVector& b, Gauge gauge) const {
  if (b.space->kind() != SpaceKind::RaviartThomas) throw InvalidArgument("vector_potential: input must be an RT field");
  const double div = divergence_norm(b);
  if (div > 1e-10)
    throw DivergenceError("vector_potential: B_h is not divergence free (max |D2 B| = " + std::to_string(div) + ")", div);
  const Vector top = c_.transpose() * (mr_ * free(b));
  const Vector bottom = Vector::Zero(g_.cols());
  const SparseLu& lu = gauge == Gauge::MassOrthogonal ? curl_saddle_ : curl_saddle_plain_;
  return from_free(nedelec_, saddle_solve(lu, top, bottom, nullptr));
}

double OperatorContext::commuting_check(const AnalyticField& e, double t) const {
  if (!e.curl) throw InvalidArgument("commuting_check: analytic field needs a curl");
  AnalyticField curl_e;
  curl_e.value = e.curl;
  const FieldVector lhs = pi_tilde_rt(curl_e, t);
  const FieldVector rhs = curl(pi_n(e, t).field);
  const Vector d = free(lhs) - free(rhs);
  return std::sqrt(std::max(0.0, d.dot(mr_ * d)));
}

FieldVector OperatorContext::grad(const FieldVector& p) const {
  if (p.space->kind() != SpaceKind::Lagrange) throw InvalidArgument("grad: input must be a Lagrange field");
  return from_free(nedelec_, g_ * free(p));
}

FieldVector OperatorContext::curl(const FieldVector& v) const {
  if (v.space->kind() != SpaceKind::Nedelec) throw InvalidArgument("curl: input must be a Nedelec field");
  return from_free(rt_, c_ * free(v));
}

Vector OperatorContext::flux_divergence(const FieldVector& b) const {
  if (b.space->kind() != SpaceKind::RaviartThomas) throw InvalidArgument("flux_divergence: input must be an RT field");
  // Boundary faces carry B.n = 0 in H_0(div); only free coefficients count.
  return d_ * free(b);
}

double OperatorContext::divergence_norm(const FieldVector& b) const {
  const Vector d = flux_divergence(b);
  return d.size() == 0 ? 0.0 : d.cwiseAbs().maxCoeff();
}

double OperatorContext::inner(const FieldVector& a, const FieldVector& b) const {
  const SpaceKind ka = a.space->kind();
  const SpaceKind kb = b.space->kind();
  const Vector af = free(a);
  const Vector bf = free(b);
  if (ka == SpaceKind::Nedelec && kb == SpaceKind::Nedelec) return af.dot(mn_ * bf);
  if (ka == SpaceKind::RaviartThomas && kb == SpaceKind::RaviartThomas) return af.dot(mr_ * bf);
  if (ka == SpaceKind::Nedelec && kb == SpaceKind::RaviartThomas) return af.dot(x_ * bf);
  if (ka == SpaceKind::RaviartThomas && kb == SpaceKind::Nedelec) return bf.dot(x_ * af);
  if (ka == SpaceKind::Lagrange && kb == SpaceKind::Lagrange) return af.dot(ml_ * bf);
  throw InvalidArgument("inner: unsupported pair of spaces");
}

double OperatorContext::l2_norm(const FieldVector& a) const { return std::sqrt(std::max(0.0, inner(a, a))); }

}  // namespace smhd
