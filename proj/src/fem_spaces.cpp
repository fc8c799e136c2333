#include "smhd/fem_spaces.hpp"

#include <cmath>

#include "smhd/error.hpp"
#include "smhd/quadrature.hpp"
#include "smhd/whitney.hpp"

namespace smhd {

std::string to_string(SpaceKind kind) {
  switch (kind) {
    case SpaceKind::Lagrange: return "Lagrange";
    case SpaceKind::Nedelec: return "Nedelec";
    case SpaceKind::RaviartThomas: return "RaviartThomas";
    case SpaceKind::DG: return "DG";
  }
  return "?";
}

Space::Space(const TetMesh& mesh, SpaceKind kind, int order, std::vector<std::int8_t> entity_signs)
    : mesh_(&mesh), kind_(kind), order_(order), signs_(std::move(entity_signs)) {
  if (order != 0) throw InvalidArgument("Space: only order k = 0 is implemented (got k = " + std::to_string(order) + ")");
  switch (kind) {
    case SpaceKind::Lagrange: num_dofs_ = mesh.num_vertices(); break;
    case SpaceKind::Nedelec: num_dofs_ = mesh.num_edges(); break;
    case SpaceKind::RaviartThomas: num_dofs_ = mesh.num_faces(); break;
    case SpaceKind::DG: num_dofs_ = mesh.num_cells(); break;
  }
  if (!signs_.empty()) {
    if (signs_.size() != num_dofs_) throw InvalidArgument("Space: entity_signs has the wrong length");
    for (auto s : signs_)
      if (s != 1 && s != -1) throw InvalidArgument("Space: entity signs must be +1 or -1");
  }
  boundary_.assign(num_dofs_, 0);
  for (std::size_t i = 0; i < num_dofs_; ++i) {
    switch (kind) {
      case SpaceKind::Lagrange: boundary_[i] = mesh.vertex_on_boundary(i); break;
      case SpaceKind::Nedelec: boundary_[i] = mesh.edge_on_boundary(i); break;
      case SpaceKind::RaviartThomas: boundary_[i] = mesh.face_on_boundary(i); break;
      case SpaceKind::DG: boundary_[i] = 0; break;
    }
  }
  free_index_.assign(num_dofs_, -1);
  for (std::size_t i = 0; i < num_dofs_; ++i) {
    if (boundary_[i]) {
      boundary_list_.push_back(static_cast<int>(i));
    } else {
      free_index_[i] = static_cast<int>(free_.size());
      free_.push_back(static_cast<int>(i));
    }
  }
}

LocalDofs Space::local_dofs(std::size_t cell) const {
  LocalDofs d;
  switch (kind_) {
    case SpaceKind::Lagrange:
      d.count = 4;
      for (int i = 0; i < 4; ++i) d.index[i] = mesh_->sorted_cell(cell)[i];
      break;
    case SpaceKind::Nedelec:
      d.count = 6;
      for (int i = 0; i < 6; ++i) d.index[i] = mesh_->cell_edges(cell)[i];
      break;
    case SpaceKind::RaviartThomas:
      d.count = 4;
      for (int i = 0; i < 4; ++i) d.index[i] = mesh_->cell_faces(cell)[i];
      break;
    case SpaceKind::DG:
      d.count = 1;
      d.index[0] = static_cast<int>(cell);
      break;
  }
  for (int i = 0; i < d.count; ++i) d.sign[i] = entity_sign(d.index[i]);
  return d;
}

Vector Space::restrict(const Vector& full) const {
  Vector r(static_cast<Eigen::Index>(free_.size()));
  for (std::size_t i = 0; i < free_.size(); ++i) r[static_cast<Eigen::Index>(i)] = full[free_[i]];
  return r;
}

Vector Space::extend(const Vector& free) const {
  Vector f = Vector::Zero(static_cast<Eigen::Index>(num_dofs_));
  for (std::size_t i = 0; i < free_.size(); ++i) f[free_[i]] = free[static_cast<Eigen::Index>(i)];
  return f;
}

SparseMatrix Space::restriction() const {
  SparseMatrix s(static_cast<Eigen::Index>(free_.size()), static_cast<Eigen::Index>(num_dofs_));
  std::vector<Triplet> t;
  t.reserve(free_.size());
  for (std::size_t i = 0; i < free_.size(); ++i) t.emplace_back(static_cast<int>(i), free_[i], 1.0);
  s.setFromTriplets(t.begin(), t.end());
  return s;
}

FieldVector::FieldVector(const Space& s, Vector c) : space(&s), coeffs(std::move(c)) {
  if (coeffs.size() != static_cast<Eigen::Index>(s.num_dofs()))
    throw InvalidArgument("FieldVector: coefficient length " + std::to_string(coeffs.size()) +
                          " does not match space dimension " + std::to_string(s.num_dofs()));
}

AnalyticField AnalyticField::zero() {
  AnalyticField f;
  f.value = [](const Vec3&, double) { return Vec3::Zero().eval(); };
  f.curl = f.value;
  f.dt = f.value;
  f.div = [](const Vec3&, double) { return 0.0; };
  return f;
}

AnalyticField AnalyticField::constant(const Vec3& c) {
  AnalyticField f;
  f.value = [c](const Vec3&, double) { return c; };
  f.curl = [](const Vec3&, double) { return Vec3::Zero().eval(); };
  f.dt = f.curl;
  f.div = [](const Vec3&, double) { return 0.0; };
  return f;
}

ScalarField ScalarField::zero() {
  ScalarField f;
  f.value = [](const Vec3&, double) { return 0.0; };
  f.grad = [](const Vec3&, double) { return Vec3::Zero().eval(); };
  return f;
}

BasisValues eval_basis(const Space& space, std::size_t cell, const Vec3& ref) {
  constexpr double tol = 1e-12;
  if (ref.minCoeff() < -tol || ref.sum() > 1.0 + tol)
    throw InvalidArgument("eval_basis: point outside the reference tetrahedron");
  if (cell >= space.mesh().num_cells()) throw InvalidArgument("eval_basis: cell index out of range");

  const CellGeometry& g = space.mesh().geometry(cell);
  const whitney::Bary l = whitney::barycentric(ref);
  const std::array<Vec3, 4> gref = {Vec3(-1, -1, -1), Vec3(1, 0, 0), Vec3(0, 1, 0), Vec3(0, 0, 1)};
  const LocalDofs dofs = space.local_dofs(cell);

  BasisValues out;
  out.count = dofs.count;
  switch (space.kind()) {
    case SpaceKind::Lagrange:
      for (int i = 0; i < 4; ++i) {
        out.scalar[i] = l[i];
        out.grad[i] = g.inverse_transpose * gref[i];
      }
      break;
    case SpaceKind::DG:
      out.scalar[0] = 1.0;
      break;
    case SpaceKind::Nedelec:
      for (int e = 0; e < 6; ++e) {
        const int a = whitney::kEdges[e][0], b = whitney::kEdges[e][1];
        const Vec3 w = l[a] * gref[b] - l[b] * gref[a];
        const Vec3 c = 2.0 * gref[a].cross(gref[b]);
        out.value[e] = dofs.sign[e] * (g.inverse_transpose * w);
        out.curl[e] = dofs.sign[e] * (g.jacobian * c) / g.det;
      }
      break;
    case SpaceKind::RaviartThomas:
      for (int f = 0; f < 4; ++f) {
        const int a = whitney::kFaces[f][0], b = whitney::kFaces[f][1], c = whitney::kFaces[f][2];
        const Vec3 w = 2.0 * (l[a] * gref[b].cross(gref[c]) + l[b] * gref[c].cross(gref[a]) + l[c] * gref[a].cross(gref[b]));
        const double dv = 6.0 * gref[a].dot(gref[b].cross(gref[c]));
        out.value[f] = dofs.sign[f] * (g.jacobian * w) / g.det;
        out.div[f] = dofs.sign[f] * dv / g.det;
      }
      break;
  }
  return out;
}

namespace {

int default_moment_degree(const Space& s, int degree) { return degree > 0 ? degree : 2 * s.order() + 2; }

void apply_boundary(const Space& space, Vector& c, Boundary bc) {
  if (bc == Boundary::Zero)
    for (int i : space.boundary_dofs()) c[i] = 0.0;
}

void require_kind(const Space& s, SpaceKind k, const char* who) {
  if (s.kind() != k) throw InvalidArgument(std::string(who) + ": expected a " + to_string(k) + " space, got " + to_string(s.kind()));
}

}  // namespace

FieldVector interpolate_lagrange(const Space& space, const ScalarField& f, double t, Boundary bc) {
  require_kind(space, SpaceKind::Lagrange, "interpolate_lagrange");
  FieldVector out(space);
  const auto& v = space.mesh().vertices();
  for (std::size_t i = 0; i < v.size(); ++i) out.coeffs[static_cast<Eigen::Index>(i)] = f(v[i], t);
  apply_boundary(space, out.coeffs, bc);
  return out;
}

FieldVector interpolate_nedelec(const Space& space, const AnalyticField& field, double t, Boundary bc, int degree) {
  require_kind(space, SpaceKind::Nedelec, "interpolate_nedelec");
  const QuadratureRule q = segment_rule(default_moment_degree(space, degree));
  const TetMesh& mesh = space.mesh();
  FieldVector out(space);
  for (std::size_t e = 0; e < mesh.num_edges(); ++e) {
    const Vec3& xa = mesh.vertices()[mesh.edges()[e][0]];
    const Vec3& xb = mesh.vertices()[mesh.edges()[e][1]];
    const Vec3 tangent = xb - xa;
    double m = 0.0;
    for (std::size_t p = 0; p < q.size(); ++p) m += q.weights[p] * field(xa + q.points[p].x() * tangent, t).dot(tangent);
    out.coeffs[static_cast<Eigen::Index>(e)] = space.entity_sign(e) * m;
  }
  apply_boundary(space, out.coeffs, bc);
  return out;
}

FieldVector interpolate_rt(const Space& space, const AnalyticField& field, double t, Boundary bc, int degree) {
  require_kind(space, SpaceKind::RaviartThomas, "interpolate_rt");
  const QuadratureRule q = triangle_rule(default_moment_degree(space, degree));
  const TetMesh& mesh = space.mesh();
  FieldVector out(space);
  for (std::size_t f = 0; f < mesh.num_faces(); ++f) {
    const auto& fv = mesh.faces()[f];
    const Vec3& xa = mesh.vertices()[fv[0]];
    const Vec3 e1 = mesh.vertices()[fv[1]] - xa;
    const Vec3 e2 = mesh.vertices()[fv[2]] - xa;
    const Vec3 normal = e1.cross(e2);  // |normal| = 2 * area; weights sum to 1/2
    double m = 0.0;
    for (std::size_t p = 0; p < q.size(); ++p)
      m += q.weights[p] * field(xa + q.points[p].x() * e1 + q.points[p].y() * e2, t).dot(normal);
    out.coeffs[static_cast<Eigen::Index>(f)] = space.entity_sign(f) * m;
  }
  apply_boundary(space, out.coeffs, bc);
  return out;
}

Vec3 evaluate(const FieldVector& field, std::size_t cell, const Vec3& ref) {
  const Space& s = *field.space;
  const CellGeometry& g = s.mesh().geometry(cell);
  const auto l = whitney::barycentric(ref);
  const LocalDofs d = s.local_dofs(cell);
  Vec3 v = Vec3::Zero();
  if (s.kind() == SpaceKind::Nedelec) {
    std::array<Vec3, 6> w;
    whitney::edge_values(g, l, w);
    for (int i = 0; i < 6; ++i) v += d.sign[i] * field.coeffs[d.index[i]] * w[i];
  } else if (s.kind() == SpaceKind::RaviartThomas) {
    std::array<Vec3, 4> w;
    whitney::face_values(g, l, w);
    for (int i = 0; i < 4; ++i) v += d.sign[i] * field.coeffs[d.index[i]] * w[i];
  } else {
    throw InvalidArgument("evaluate: not a vector-valued space");
  }
  return v;
}

double evaluate_scalar(const FieldVector& field, std::size_t cell, const Vec3& ref) {
  const Space& s = *field.space;
  if (s.kind() == SpaceKind::DG) return field.coeffs[static_cast<Eigen::Index>(cell)];
  if (s.kind() != SpaceKind::Lagrange) throw InvalidArgument("evaluate_scalar: not a scalar space");
  const auto l = whitney::barycentric(ref);
  const auto& sc = s.mesh().sorted_cell(cell);
  double v = 0.0;
  for (int i = 0; i < 4; ++i) v += field.coeffs[sc[i]] * l[i];
  return v;
}

Vec3 evaluate_curl(const FieldVector& field, std::size_t cell, const Vec3&) {
  const Space& s = *field.space;
  require_kind(s, SpaceKind::Nedelec, "evaluate_curl");
  std::array<Vec3, 6> c;
  whitney::edge_curls(s.mesh().geometry(cell), c);
  const LocalDofs d = s.local_dofs(cell);
  Vec3 v = Vec3::Zero();
  for (int i = 0; i < 6; ++i) v += d.sign[i] * field.coeffs[d.index[i]] * c[i];
  return v;
}

double l2_error(const FieldVector& vh, const AnalyticField& v, double t, int degree) {
  const QuadratureRule q = tet_rule(degree);
  const TetMesh& mesh = vh.space->mesh();
  double sum = 0.0;
  for (std::size_t c = 0; c < mesh.num_cells(); ++c) {
    const CellGeometry& g = mesh.geometry(c);
    double local = 0.0;
    for (std::size_t p = 0; p < q.size(); ++p)
      local += q.weights[p] * (evaluate(vh, c, q.points[p]) - v(g.map(q.points[p]), t)).squaredNorm();
    sum += local * std::abs(g.det);
  }
  return std::sqrt(sum);
}

double curl_error(const FieldVector& vh, const AnalyticField& v, double t, int degree) {
  if (!v.curl) throw InvalidArgument("curl_error: analytic field has no curl");
  const QuadratureRule q = tet_rule(degree);
  const TetMesh& mesh = vh.space->mesh();
  double sum = 0.0;
  for (std::size_t c = 0; c < mesh.num_cells(); ++c) {
    const CellGeometry& g = mesh.geometry(c);
    const Vec3 ch = evaluate_curl(vh, c, Vec3::Zero());
    double local = 0.0;
    for (std::size_t p = 0; p < q.size(); ++p) local += q.weights[p] * (ch - v.curl(g.map(q.points[p]), t)).squaredNorm();
    sum += local * std::abs(g.det);
  }
  return std::sqrt(sum);
}

double l2_error(const FieldVector& ph, const ScalarField& p, double t, int degree) {
  const QuadratureRule q = tet_rule(degree);
  const TetMesh& mesh = ph.space->mesh();
  double sum = 0.0;
  for (std::size_t c = 0; c < mesh.num_cells(); ++c) {
    const CellGeometry& g = mesh.geometry(c);
    double local = 0.0;
    for (std::size_t k = 0; k < q.size(); ++k) {
      const double d = evaluate_scalar(ph, c, q.points[k]) - p(g.map(q.points[k]), t);
      local += q.weights[k] * d * d;
    }
    sum += local * std::abs(g.det);
  }
  return std::sqrt(sum);
}

}  // namespace smhd
