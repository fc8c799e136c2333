#include "smhd/assembly.hpp"

#include "smhd/error.hpp"
#include "smhd/whitney.hpp"

namespace smhd {

namespace kernels {

SparseMatrix scatter(const std::vector<CellBlock>& blocks, Eigen::Index rows, Eigen::Index cols) {
  std::vector<Triplet> trip;
  std::size_t nnz = 0;
  for (const auto& b : blocks) nnz += static_cast<std::size_t>(b.rows * b.cols);
  trip.reserve(nnz);
  for (const auto& b : blocks)
    for (int i = 0; i < b.rows; ++i)
      for (int j = 0; j < b.cols; ++j) trip.emplace_back(b.row_index[i], b.col_index[j], b.values(i, j));
  SparseMatrix m(rows, cols);
  m.setFromTriplets(trip.begin(), trip.end());
  m.makeCompressed();
  return m;
}

Vector scatter(const std::vector<CellVector>& blocks, Eigen::Index rows) {
  Vector v = Vector::Zero(rows);
  for (const auto& b : blocks)
    for (int i = 0; i < b.rows; ++i) v[b.row_index[i]] += b.values[i];
  return v;
}

}  // namespace kernels

namespace {

int resolve_degree(const Space& s, int degree) { return degree > 0 ? degree : assembly_degree(s.order()); }

bool vector_valued(const Space& s) {
  return s.kind() == SpaceKind::Nedelec || s.kind() == SpaceKind::RaviartThomas;
}

void require_vector(const Space& s, const char* who) {
  if (!vector_valued(s)) throw InvalidArgument(std::string(who) + ": expected a Nedelec or Raviart-Thomas space");
}

// Signed vector basis values of a Nedelec or RT space on one cell.
int vector_basis(const Space& s, const CellGeometry& g, const whitney::Bary& l, const LocalDofs& d,
                 std::array<Vec3, 6>& out) {
  if (s.kind() == SpaceKind::Nedelec) {
    whitney::edge_values(g, l, out);
  } else {
    std::array<Vec3, 4> f;
    whitney::face_values(g, l, f);
    for (int i = 0; i < 4; ++i) out[i] = f[i];
  }
  for (int i = 0; i < d.count; ++i) out[i] *= d.sign[i];
  return d.count;
}

Vec3 field_value(const FieldVector& f, const std::array<Vec3, 6>& basis, const LocalDofs& d) {
  Vec3 v = Vec3::Zero();
  for (int i = 0; i < d.count; ++i) v += f.coeffs[d.index[i]] * basis[i];
  return v;
}

void set_indices(CellBlock& b, const LocalDofs& r, const LocalDofs& c) {
  b.rows = r.count;
  b.cols = c.count;
  for (int i = 0; i < r.count; ++i) b.row_index[i] = r.index[i];
  for (int j = 0; j < c.count; ++j) b.col_index[j] = c.index[j];
}

}  // namespace

SparseMatrix mass_matrix(const Space& space, int degree, Exec exec) {
  const TetMesh& mesh = space.mesh();
  const QuadratureRule q = tet_rule(resolve_degree(space, degree));
  auto kernel = [&](std::size_t c, CellBlock& b) {
    const CellGeometry& g = mesh.geometry(c);
    const LocalDofs d = space.local_dofs(c);
    set_indices(b, d, d);
    const double jac = std::abs(g.det);
    for (std::size_t p = 0; p < q.size(); ++p) {
      const auto l = whitney::barycentric(q.points[p]);
      const double w = q.weights[p] * jac;
      if (space.kind() == SpaceKind::Lagrange) {
        for (int i = 0; i < 4; ++i)
          for (int j = 0; j < 4; ++j) b.values(i, j) += w * l[i] * l[j];
      } else if (space.kind() == SpaceKind::DG) {
        b.values(0, 0) += w;
      } else {
        std::array<Vec3, 6> phi;
        const int n = vector_basis(space, g, l, d, phi);
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j) b.values(i, j) += w * phi[i].dot(phi[j]);
      }
    }
  };
  auto blocks = kernels::compute_cell_blocks<CellBlock>(mesh.num_cells(), kernel, exec);
  const auto n = static_cast<Eigen::Index>(space.num_dofs());
  return kernels::scatter(blocks, n, n);
}

SparseMatrix mixed_mass_matrix(const Space& test, const Space& trial, int degree, Exec exec) {
  require_vector(test, "mixed_mass_matrix");
  require_vector(trial, "mixed_mass_matrix");
  const TetMesh& mesh = test.mesh();
  const QuadratureRule q = tet_rule(resolve_degree(test, degree));
  auto kernel = [&](std::size_t c, CellBlock& b) {
    const CellGeometry& g = mesh.geometry(c);
    const LocalDofs dr = test.local_dofs(c);
    const LocalDofs dc = trial.local_dofs(c);
    set_indices(b, dr, dc);
    const double jac = std::abs(g.det);
    for (std::size_t p = 0; p < q.size(); ++p) {
      const auto l = whitney::barycentric(q.points[p]);
      std::array<Vec3, 6> pr, pc;
      vector_basis(test, g, l, dr, pr);
      vector_basis(trial, g, l, dc, pc);
      const double w = q.weights[p] * jac;
      for (int i = 0; i < b.rows; ++i)
        for (int j = 0; j < b.cols; ++j) b.values(i, j) += w * pr[i].dot(pc[j]);
    }
  };
  auto blocks = kernels::compute_cell_blocks<CellBlock>(mesh.num_cells(), kernel, exec);
  return kernels::scatter(blocks, static_cast<Eigen::Index>(test.num_dofs()), static_cast<Eigen::Index>(trial.num_dofs()));
}

SparseMatrix curl_curl_matrix(const Space& nedelec, int degree, Exec exec) {
  if (nedelec.kind() != SpaceKind::Nedelec) throw InvalidArgument("curl_curl_matrix: expected a Nedelec space");
  const TetMesh& mesh = nedelec.mesh();
  const QuadratureRule q = tet_rule(resolve_degree(nedelec, degree));
  auto kernel = [&](std::size_t c, CellBlock& b) {
    const CellGeometry& g = mesh.geometry(c);
    const LocalDofs d = nedelec.local_dofs(c);
    set_indices(b, d, d);
    std::array<Vec3, 6> cu;
    whitney::edge_curls(g, cu);
    for (int i = 0; i < 6; ++i) cu[i] *= d.sign[i];
    const double jac = std::abs(g.det);
    for (std::size_t p = 0; p < q.size(); ++p) {
      const double w = q.weights[p] * jac;
      for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) b.values(i, j) += w * cu[i].dot(cu[j]);
    }
  };
  auto blocks = kernels::compute_cell_blocks<CellBlock>(mesh.num_cells(), kernel, exec);
  const auto n = static_cast<Eigen::Index>(nedelec.num_dofs());
  return kernels::scatter(blocks, n, n);
}

SparseMatrix lagrange_stiffness(const Space& lagrange, int degree, Exec exec) {
  if (lagrange.kind() != SpaceKind::Lagrange) throw InvalidArgument("lagrange_stiffness: expected a Lagrange space");
  const TetMesh& mesh = lagrange.mesh();
  const QuadratureRule q = tet_rule(resolve_degree(lagrange, degree));
  auto kernel = [&](std::size_t c, CellBlock& b) {
    const CellGeometry& g = mesh.geometry(c);
    const LocalDofs d = lagrange.local_dofs(c);
    set_indices(b, d, d);
    const double jac = std::abs(g.det);
    for (std::size_t p = 0; p < q.size(); ++p) {
      const double w = q.weights[p] * jac;
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) b.values(i, j) += w * g.grad_lambda[i].dot(g.grad_lambda[j]);
    }
  };
  auto blocks = kernels::compute_cell_blocks<CellBlock>(mesh.num_cells(), kernel, exec);
  const auto n = static_cast<Eigen::Index>(lagrange.num_dofs());
  return kernels::scatter(blocks, n, n);
}

MixedMatrices mixed_matrices(const Space& lagrange, const Space& nedelec, const Space& rt, const Space& dg, int degree,
                             Exec exec) {
  if (lagrange.kind() != SpaceKind::Lagrange || nedelec.kind() != SpaceKind::Nedelec ||
      rt.kind() != SpaceKind::RaviartThomas || dg.kind() != SpaceKind::DG)
    throw InvalidArgument("mixed_matrices: spaces must be (Lagrange, Nedelec, RT, DG)");
  const TetMesh& mesh = nedelec.mesh();
  const QuadratureRule q = tet_rule(resolve_degree(nedelec, degree));
  MixedMatrices out;

  auto g_kernel = [&](std::size_t c, CellBlock& b) {
    const CellGeometry& g = mesh.geometry(c);
    const LocalDofs dn = nedelec.local_dofs(c);
    const LocalDofs dl = lagrange.local_dofs(c);
    set_indices(b, dn, dl);
    const double jac = std::abs(g.det);
    for (std::size_t p = 0; p < q.size(); ++p) {
      const auto l = whitney::barycentric(q.points[p]);
      std::array<Vec3, 6> w;
      vector_basis(nedelec, g, l, dn, w);
      const double wt = q.weights[p] * jac;
      for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 4; ++j) b.values(i, j) += wt * w[i].dot(g.grad_lambda[j]);
    }
  };
  out.G = kernels::scatter(kernels::compute_cell_blocks<CellBlock>(mesh.num_cells(), g_kernel, exec),
                           static_cast<Eigen::Index>(nedelec.num_dofs()), static_cast<Eigen::Index>(lagrange.num_dofs()));

  auto k_kernel = [&](std::size_t c, CellBlock& b) {
    const CellGeometry& g = mesh.geometry(c);
    const LocalDofs dn = nedelec.local_dofs(c);
    const LocalDofs dr = rt.local_dofs(c);
    set_indices(b, dn, dr);
    std::array<Vec3, 6> cu;
    whitney::edge_curls(g, cu);
    for (int i = 0; i < 6; ++i) cu[i] *= dn.sign[i];
    const double jac = std::abs(g.det);
    for (std::size_t p = 0; p < q.size(); ++p) {
      const auto l = whitney::barycentric(q.points[p]);
      std::array<Vec3, 6> w;
      vector_basis(rt, g, l, dr, w);
      const double wt = q.weights[p] * jac;
      for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 4; ++j) b.values(i, j) += wt * cu[i].dot(w[j]);
    }
  };
  out.K = kernels::scatter(kernels::compute_cell_blocks<CellBlock>(mesh.num_cells(), k_kernel, exec),
                           static_cast<Eigen::Index>(nedelec.num_dofs()), static_cast<Eigen::Index>(rt.num_dofs()));

  auto d_kernel = [&](std::size_t c, CellBlock& b) {
    const CellGeometry& g = mesh.geometry(c);
    const LocalDofs dd = dg.local_dofs(c);
    const LocalDofs dr = rt.local_dofs(c);
    set_indices(b, dd, dr);
    std::array<double, 4> dv;
    whitney::face_divs(g, dv);
    const double jac = std::abs(g.det);
    for (std::size_t p = 0; p < q.size(); ++p) {
      const double wt = q.weights[p] * jac;
      for (int j = 0; j < 4; ++j) b.values(0, j) += wt * dd.sign[0] * dr.sign[j] * dv[j];
    }
  };
  out.D = kernels::scatter(kernels::compute_cell_blocks<CellBlock>(mesh.num_cells(), d_kernel, exec),
                           static_cast<Eigen::Index>(dg.num_dofs()), static_cast<Eigen::Index>(rt.num_dofs()));
  return out;
}

Vector cross_form(const FieldVector& a, const FieldVector& b, const Space& test, int degree, Exec exec) {
  require_vector(*a.space, "cross_form");
  require_vector(*b.space, "cross_form");
  require_vector(test, "cross_form");
  const TetMesh& mesh = test.mesh();
  const QuadratureRule q = tet_rule(resolve_degree(test, degree));
  auto kernel = [&](std::size_t c, CellVector& out) {
    const CellGeometry& g = mesh.geometry(c);
    const LocalDofs dt = test.local_dofs(c);
    const LocalDofs da = a.space->local_dofs(c);
    const LocalDofs db = b.space->local_dofs(c);
    out.rows = dt.count;
    for (int i = 0; i < dt.count; ++i) out.row_index[i] = dt.index[i];
    const double jac = std::abs(g.det);
    for (std::size_t p = 0; p < q.size(); ++p) {
      const auto l = whitney::barycentric(q.points[p]);
      std::array<Vec3, 6> wt, wa, wb;
      vector_basis(test, g, l, dt, wt);
      vector_basis(*a.space, g, l, da, wa);
      vector_basis(*b.space, g, l, db, wb);
      const Vec3 axb = field_value(a, wa, da).cross(field_value(b, wb, db));
      const double w = q.weights[p] * jac;
      for (int i = 0; i < dt.count; ++i) out.values[i] += w * axb.dot(wt[i]);
    }
  };
  auto blocks = kernels::compute_cell_blocks<CellVector>(mesh.num_cells(), kernel, exec);
  return kernels::scatter(blocks, static_cast<Eigen::Index>(test.num_dofs()));
}

SparseMatrix cross_jacobian(const FieldVector& a, const FieldVector& b, const Space& test, CrossArgument wrt,
                            int degree, Exec exec) {
  require_vector(*a.space, "cross_jacobian");
  require_vector(*b.space, "cross_jacobian");
  require_vector(test, "cross_jacobian");
  const TetMesh& mesh = test.mesh();
  const QuadratureRule q = tet_rule(resolve_degree(test, degree));
  const Space& trial = wrt == CrossArgument::First ? *a.space : *b.space;
  auto kernel = [&](std::size_t c, CellBlock& blk) {
    const CellGeometry& g = mesh.geometry(c);
    const LocalDofs dt = test.local_dofs(c);
    const LocalDofs da = a.space->local_dofs(c);
    const LocalDofs db = b.space->local_dofs(c);
    const LocalDofs& dtr = wrt == CrossArgument::First ? da : db;
    set_indices(blk, dt, dtr);
    const double jac = std::abs(g.det);
    for (std::size_t p = 0; p < q.size(); ++p) {
      const auto l = whitney::barycentric(q.points[p]);
      std::array<Vec3, 6> wt, wa, wb;
      vector_basis(test, g, l, dt, wt);
      vector_basis(*a.space, g, l, da, wa);
      vector_basis(*b.space, g, l, db, wb);
      const double w = q.weights[p] * jac;
      if (wrt == CrossArgument::First) {
        const Vec3 bv = field_value(b, wb, db);
        for (int j = 0; j < da.count; ++j) {
          const Vec3 col = wa[j].cross(bv);
          for (int i = 0; i < dt.count; ++i) blk.values(i, j) += w * col.dot(wt[i]);
        }
      } else {
        const Vec3 av = field_value(a, wa, da);
        for (int j = 0; j < db.count; ++j) {
          const Vec3 col = av.cross(wb[j]);
          for (int i = 0; i < dt.count; ++i) blk.values(i, j) += w * col.dot(wt[i]);
        }
      }
    }
  };
  auto blocks = kernels::compute_cell_blocks<CellBlock>(mesh.num_cells(), kernel, exec);
  return kernels::scatter(blocks, static_cast<Eigen::Index>(test.num_dofs()), static_cast<Eigen::Index>(trial.num_dofs()));
}

Vector load_vector(const Space& test, const AnalyticField& f, double t, int degree, Exec exec) {
  require_vector(test, "load_vector");
  const TetMesh& mesh = test.mesh();
  const QuadratureRule q = tet_rule(degree > 0 ? degree : assembly_degree(test.order()) + 2);
  auto kernel = [&](std::size_t c, CellVector& out) {
    const CellGeometry& g = mesh.geometry(c);
    const LocalDofs dt = test.local_dofs(c);
    out.rows = dt.count;
    for (int i = 0; i < dt.count; ++i) out.row_index[i] = dt.index[i];
    const double jac = std::abs(g.det);
    for (std::size_t p = 0; p < q.size(); ++p) {
      const auto l = whitney::barycentric(q.points[p]);
      std::array<Vec3, 6> wt;
      vector_basis(test, g, l, dt, wt);
      const Vec3 fv = f(g.map(q.points[p]), t);
      const double w = q.weights[p] * jac;
      for (int i = 0; i < dt.count; ++i) out.values[i] += w * fv.dot(wt[i]);
    }
  };
  auto blocks = kernels::compute_cell_blocks<CellVector>(mesh.num_cells(), kernel, exec);
  return kernels::scatter(blocks, static_cast<Eigen::Index>(test.num_dofs()));
}

}  // namespace smhd
