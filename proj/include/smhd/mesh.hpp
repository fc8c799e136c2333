#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "smhd/types.hpp"

namespace smhd {

/// Axis-aligned box [lo, hi].
struct Box {
  Vec3 lo = Vec3::Zero();
  Vec3 hi = Vec3::Ones();

  static Box unit() { return {}; }
  Vec3 extents() const { return hi - lo; }
};

/// Affine map from the reference tetrahedron onto a cell whose vertices are
/// taken in ascending global index order. `det` is signed.
struct CellGeometry {
  Vec3 origin;
  Mat3 jacobian;
  Mat3 inverse_transpose;
  double det = 0.0;
  double volume = 0.0;
  std::array<Vec3, 4> grad_lambda;

  Vec3 map(const Vec3& ref) const { return origin + jacobian * ref; }
};

struct MeshStatistics {
  double h = 0.0;                  ///< max cell diameter
  double min_diameter = 0.0;       ///< min cell diameter
  double shape_regularity = 0.0;   ///< max over cells of diameter / inradius
};

/// Conforming simplicial mesh of a box with the Kuhn (Freudenthal)
/// subdivision: every one of the n^3 sub-cubes is cut into 6 tetrahedra that
/// share its main diagonal.
///
/// Orientation convention: edges and faces are oriented by ascending global
/// vertex index. Cells are stored positively oriented; `sorted_cell` gives
/// the same vertices in ascending order, which is the local numbering used by
/// every finite element basis.
class TetMesh {
 public:
  static TetMesh build_box(int n, const Box& box = Box::unit());

  int subdivisions() const { return n_; }
  const Box& box() const { return box_; }

  std::size_t num_vertices() const { return vertices_.size(); }
  std::size_t num_edges() const { return edges_.size(); }
  std::size_t num_faces() const { return faces_.size(); }
  std::size_t num_cells() const { return cells_.size(); }

  const std::vector<Vec3>& vertices() const { return vertices_; }
  const std::vector<std::array<int, 2>>& edges() const { return edges_; }
  const std::vector<std::array<int, 3>>& faces() const { return faces_; }
  const std::vector<std::array<int, 4>>& cells() const { return cells_; }

  const std::array<int, 4>& sorted_cell(std::size_t c) const { return sorted_cells_[c]; }
  /// Global edges of cell c, local order (0,1),(0,2),(0,3),(1,2),(1,3),(2,3)
  /// of the sorted vertices.
  const std::array<int, 6>& cell_edges(std::size_t c) const { return cell_edges_[c]; }
  /// Global faces of cell c; local face i omits sorted vertex i.
  const std::array<int, 4>& cell_faces(std::size_t c) const { return cell_faces_[c]; }
  const CellGeometry& geometry(std::size_t c) const { return geometry_[c]; }

  bool vertex_on_boundary(std::size_t v) const { return vertex_boundary_[v] != 0; }
  bool edge_on_boundary(std::size_t e) const { return edge_boundary_[e] != 0; }
  bool face_on_boundary(std::size_t f) const { return face_boundary_[f] != 0; }

  /// Index of the edge (a,b) in any order, or -1.
  int find_edge(int a, int b) const;
  /// Index of the face with the given vertices in any order, or -1.
  int find_face(int a, int b, int c) const;

  /// Max cell diameter.
  double h() const { return h_; }

 private:
  TetMesh() = default;
  void build_topology();
  void build_geometry();

  int n_ = 0;
  Box box_;
  std::vector<Vec3> vertices_;
  std::vector<std::array<int, 2>> edges_;
  std::vector<std::array<int, 3>> faces_;
  std::vector<std::array<int, 4>> cells_;
  std::vector<std::array<int, 4>> sorted_cells_;
  std::vector<std::array<int, 6>> cell_edges_;
  std::vector<std::array<int, 4>> cell_faces_;
  std::vector<CellGeometry> geometry_;
  std::vector<std::uint8_t> vertex_boundary_;
  std::vector<std::uint8_t> edge_boundary_;
  std::vector<std::uint8_t> face_boundary_;
  double h_ = 0.0;
};

/// Kuhn mesh of `box` with n subdivisions per axis. Throws InvalidArgument for
/// n < 1 or a degenerate box.
TetMesh build_box_mesh(int n, const Box& box = Box::unit());

/// Signed incidence matrix of the simplicial complex:
/// k = 0: edges x vertices, k = 1: faces x edges, k = 2: cells x faces.
/// For k = 2 the signs make D2 * (face fluxes) the outward flux of each cell.
IncidenceMatrix incidence(const TetMesh& mesh, int k);

MeshStatistics mesh_statistics(const TetMesh& mesh);

/// Legacy ASCII VTK unstructured grid of the mesh, optionally with point and
/// cell vector data.
void write_vtk(std::ostream& os, const TetMesh& mesh,
               const std::vector<std::pair<std::string, std::vector<Vec3>>>& point_vectors = {},
               const std::vector<std::pair<std::string, std::vector<double>>>& point_scalars = {},
               const std::vector<std::pair<std::string, std::vector<Vec3>>>& cell_vectors = {});

}  // namespace smhd
