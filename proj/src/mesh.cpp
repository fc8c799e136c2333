#include "smhd/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <ostream>

#include <Eigen/Dense>

#include "smhd/error.hpp"

namespace smhd {

namespace {

constexpr std::array<std::array<int, 2>, 6> kLocalEdges = {{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
constexpr std::array<std::array<int, 3>, 4> kLocalFaces = {{{1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}}};

double signed_volume6(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& d) {
  return (b - a).dot((c - a).cross(d - a));
}

}  // namespace

TetMesh TetMesh::build_box(int n, const Box& box) {
  if (n < 1) throw InvalidArgument("build_box_mesh: subdivisions must be >= 1, got " + std::to_string(n));
  const Vec3 ext = box.extents();
  if (!(ext.minCoeff() > 0.0)) throw InvalidArgument("build_box_mesh: box must have positive extents");

  TetMesh mesh;
  mesh.n_ = n;
  mesh.box_ = box;
  const int np = n + 1;
  auto vid = [np](int i, int j, int k) { return i + np * (j + np * k); };

  mesh.vertices_.resize(static_cast<std::size_t>(np) * np * np);
  for (int k = 0; k < np; ++k)
    for (int j = 0; j < np; ++j)
      for (int i = 0; i < np; ++i)
        mesh.vertices_[vid(i, j, k)] =
            box.lo + Vec3(ext.x() * i / n, ext.y() * j / n, ext.z() * k / n);

  // Six tetrahedra per cube, one per permutation of the axes; all of them
  // contain the diagonal from the low corner to the high corner.
  std::array<std::array<int, 3>, 6> perms = {{{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
  mesh.cells_.reserve(6 * static_cast<std::size_t>(n) * n * n);
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i)
        for (const auto& p : perms) {
          std::array<int, 3> idx = {i, j, k};
          std::array<int, 4> tet{};
          tet[0] = vid(idx[0], idx[1], idx[2]);
          for (int s = 0; s < 3; ++s) {
            ++idx[p[s]];
            tet[s + 1] = vid(idx[0], idx[1], idx[2]);
          }
          const auto& v = mesh.vertices_;
          if (signed_volume6(v[tet[0]], v[tet[1]], v[tet[2]], v[tet[3]]) < 0.0) std::swap(tet[2], tet[3]);
          mesh.cells_.push_back(tet);
        }

  mesh.build_topology();
  mesh.build_geometry();
  return mesh;
}

void TetMesh::build_topology() {
  const std::size_t nc = cells_.size();
  sorted_cells_.resize(nc);
  for (std::size_t c = 0; c < nc; ++c) {
    sorted_cells_[c] = cells_[c];
    std::sort(sorted_cells_[c].begin(), sorted_cells_[c].end());
  }

  std::vector<std::array<int, 2>> all_edges;
  std::vector<std::array<int, 3>> all_faces;
  all_edges.reserve(6 * nc);
  all_faces.reserve(4 * nc);
  for (const auto& s : sorted_cells_) {
    for (const auto& e : kLocalEdges) all_edges.push_back({s[e[0]], s[e[1]]});
    for (const auto& f : kLocalFaces) all_faces.push_back({s[f[0]], s[f[1]], s[f[2]]});
  }
  std::sort(all_edges.begin(), all_edges.end());
  all_edges.erase(std::unique(all_edges.begin(), all_edges.end()), all_edges.end());
  std::sort(all_faces.begin(), all_faces.end());
  all_faces.erase(std::unique(all_faces.begin(), all_faces.end()), all_faces.end());
  edges_ = std::move(all_edges);
  faces_ = std::move(all_faces);

  cell_edges_.resize(nc);
  cell_faces_.resize(nc);
  for (std::size_t c = 0; c < nc; ++c) {
    const auto& s = sorted_cells_[c];
    for (int e = 0; e < 6; ++e) cell_edges_[c][e] = find_edge(s[kLocalEdges[e][0]], s[kLocalEdges[e][1]]);
    for (int f = 0; f < 4; ++f)
      cell_faces_[c][f] = find_face(s[kLocalFaces[f][0]], s[kLocalFaces[f][1]], s[kLocalFaces[f][2]]);
  }

  // An entity is on the boundary iff all of its vertices lie in one box face.
  auto plane_mask = [this](int v) {
    const Vec3& x = vertices_[v];
    const double tol = 1e-12 * (box_.extents().maxCoeff());
    unsigned mask = 0;
    for (int d = 0; d < 3; ++d) {
      if (std::abs(x[d] - box_.lo[d]) <= tol) mask |= 1u << (2 * d);
      if (std::abs(x[d] - box_.hi[d]) <= tol) mask |= 1u << (2 * d + 1);
    }
    return mask;
  };
  std::vector<unsigned> vmask(vertices_.size());
  vertex_boundary_.resize(vertices_.size());
  for (std::size_t v = 0; v < vertices_.size(); ++v) {
    vmask[v] = plane_mask(static_cast<int>(v));
    vertex_boundary_[v] = vmask[v] != 0;
  }
  edge_boundary_.resize(edges_.size());
  for (std::size_t e = 0; e < edges_.size(); ++e)
    edge_boundary_[e] = (vmask[edges_[e][0]] & vmask[edges_[e][1]]) != 0;
  face_boundary_.resize(faces_.size());
  for (std::size_t f = 0; f < faces_.size(); ++f)
    face_boundary_[f] = (vmask[faces_[f][0]] & vmask[faces_[f][1]] & vmask[faces_[f][2]]) != 0;
}

void TetMesh::build_geometry() {
  geometry_.resize(cells_.size());
  h_ = 0.0;
  for (std::size_t c = 0; c < cells_.size(); ++c) {
    const auto& s = sorted_cells_[c];
    CellGeometry& g = geometry_[c];
    g.origin = vertices_[s[0]];
    for (int d = 0; d < 3; ++d) g.jacobian.col(d) = vertices_[s[d + 1]] - g.origin;
    g.det = g.jacobian.determinant();
    g.volume = std::abs(g.det) / 6.0;
    g.inverse_transpose = g.jacobian.inverse().transpose();
    // grad lambda_i = J^{-T} grad_ref lambda_i
    g.grad_lambda[1] = g.inverse_transpose.col(0);
    g.grad_lambda[2] = g.inverse_transpose.col(1);
    g.grad_lambda[3] = g.inverse_transpose.col(2);
    g.grad_lambda[0] = -(g.grad_lambda[1] + g.grad_lambda[2] + g.grad_lambda[3]);
    for (const auto& e : kLocalEdges) h_ = std::max(h_, (vertices_[s[e[0]]] - vertices_[s[e[1]]]).norm());
  }
}

int TetMesh::find_edge(int a, int b) const {
  std::array<int, 2> key = {std::min(a, b), std::max(a, b)};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return -1;
  return static_cast<int>(it - edges_.begin());
}

int TetMesh::find_face(int a, int b, int c) const {
  std::array<int, 3> key = {a, b, c};
  std::sort(key.begin(), key.end());
  auto it = std::lower_bound(faces_.begin(), faces_.end(), key);
  if (it == faces_.end() || *it != key) return -1;
  return static_cast<int>(it - faces_.begin());
}

TetMesh build_box_mesh(int n, const Box& box) { return TetMesh::build_box(n, box); }

IncidenceMatrix incidence(const TetMesh& mesh, int k) {
  std::vector<Eigen::Triplet<int>> trip;
  IncidenceMatrix d;
  switch (k) {
    case 0: {
      d.resize(static_cast<Eigen::Index>(mesh.num_edges()), static_cast<Eigen::Index>(mesh.num_vertices()));
      for (std::size_t e = 0; e < mesh.num_edges(); ++e) {
        const int row = static_cast<int>(e);
        trip.emplace_back(row, mesh.edges()[e][0], -1);
        trip.emplace_back(row, mesh.edges()[e][1], 1);
      }
      break;
    }
    case 1: {
      d.resize(static_cast<Eigen::Index>(mesh.num_faces()), static_cast<Eigen::Index>(mesh.num_edges()));
      for (std::size_t f = 0; f < mesh.num_faces(); ++f) {
        const auto& v = mesh.faces()[f];
        const int row = static_cast<int>(f);
        // boundary of [a,b,c] = [b,c] - [a,c] + [a,b]
        trip.emplace_back(row, mesh.find_edge(v[1], v[2]), 1);
        trip.emplace_back(row, mesh.find_edge(v[0], v[2]), -1);
        trip.emplace_back(row, mesh.find_edge(v[0], v[1]), 1);
      }
      break;
    }
    case 2: {
      d.resize(static_cast<Eigen::Index>(mesh.num_cells()), static_cast<Eigen::Index>(mesh.num_faces()));
      for (std::size_t c = 0; c < mesh.num_cells(); ++c) {
        const int orient = mesh.geometry(c).det > 0.0 ? 1 : -1;
        const int row = static_cast<int>(c);
        // boundary of [a,b,c,d] = [bcd] - [acd] + [abd] - [abc]
        for (int f = 0; f < 4; ++f) trip.emplace_back(row, mesh.cell_faces(c)[f], (f % 2 == 0 ? 1 : -1) * orient);
      }
      break;
    }
    default:
      throw InvalidArgument("incidence: k must be 0, 1 or 2");
  }
  d.setFromTriplets(trip.begin(), trip.end());
  d.makeCompressed();
  return d;
}

MeshStatistics mesh_statistics(const TetMesh& mesh) {
  MeshStatistics st;
  st.min_diameter = std::numeric_limits<double>::infinity();
  const auto& v = mesh.vertices();
  for (std::size_t c = 0; c < mesh.num_cells(); ++c) {
    const auto& s = mesh.sorted_cell(c);
    double diam = 0.0;
    for (int a = 0; a < 4; ++a)
      for (int b = a + 1; b < 4; ++b) diam = std::max(diam, (v[s[a]] - v[s[b]]).norm());
    double area = 0.0;
    for (int f = 0; f < 4; ++f) {
      std::array<int, 3> t{};
      int m = 0;
      for (int a = 0; a < 4; ++a)
        if (a != f) t[m++] = s[a];
      area += 0.5 * (v[t[1]] - v[t[0]]).cross(v[t[2]] - v[t[0]]).norm();
    }
    const double inradius = 3.0 * mesh.geometry(c).volume / area;
    st.h = std::max(st.h, diam);
    st.min_diameter = std::min(st.min_diameter, diam);
    st.shape_regularity = std::max(st.shape_regularity, diam / inradius);
  }
  return st;
}

void write_vtk(std::ostream& os, const TetMesh& mesh,
               const std::vector<std::pair<std::string, std::vector<Vec3>>>& point_vectors,
               const std::vector<std::pair<std::string, std::vector<double>>>& point_scalars,
               const std::vector<std::pair<std::string, std::vector<Vec3>>>& cell_vectors) {
  os << "# vtk DataFile Version 3.0\nsmhd mesh\nASCII\nDATASET UNSTRUCTURED_GRID\n";
  os.precision(17);
  os << "POINTS " << mesh.num_vertices() << " double\n";
  for (const auto& x : mesh.vertices()) os << x.x() << ' ' << x.y() << ' ' << x.z() << '\n';
  os << "CELLS " << mesh.num_cells() << ' ' << 5 * mesh.num_cells() << '\n';
  for (const auto& c : mesh.cells()) os << "4 " << c[0] << ' ' << c[1] << ' ' << c[2] << ' ' << c[3] << '\n';
  os << "CELL_TYPES " << mesh.num_cells() << '\n';
  for (std::size_t c = 0; c < mesh.num_cells(); ++c) os << "10\n";
  if (!point_vectors.empty() || !point_scalars.empty()) {
    os << "POINT_DATA " << mesh.num_vertices() << '\n';
    for (const auto& [name, data] : point_scalars) {
      os << "SCALARS " << name << " double 1\nLOOKUP_TABLE default\n";
      for (double s : data) os << s << '\n';
    }
    for (const auto& [name, data] : point_vectors) {
      os << "VECTORS " << name << " double\n";
      for (const auto& x : data) os << x.x() << ' ' << x.y() << ' ' << x.z() << '\n';
    }
  }
  if (!cell_vectors.empty()) {
    os << "CELL_DATA " << mesh.num_cells() << '\n';
    for (const auto& [name, data] : cell_vectors) {
      os << "VECTORS " << name << " double\n";
      for (const auto& x : data) os << x.x() << ' ' << x.y() << ' ' << x.z() << '\n';
    }
  }
}

}  // namespace smhd
