#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "smhd/mesh.hpp"
#include "smhd/types.hpp"

namespace smhd {

/// The four spaces of the discrete de Rham complex. `order` is the scheme
/// order k: Lagrange has degree k+1, the others degree k.
enum class SpaceKind { Lagrange, Nedelec, RaviartThomas, DG };

std::string to_string(SpaceKind kind);

/// Degrees of freedom touching one cell, in the local (sorted-vertex) order.
struct LocalDofs {
  int count = 0;
  std::array<int, 6> index{};
  std::array<double, 6> sign{};
};

/// A discrete space on a mesh: DOF numbering, orientation signs and the set
/// of boundary DOFs realising the H_0 subspace.
///
/// At k = 0 the DOFs are vertex values (Lagrange), edge circulations along the
/// edge orientation (Nedelec), face fluxes through the face orientation
/// (Raviart-Thomas) and cell values (DG). `entity_signs` may flip the
/// orientation of individual entities; the default is +1 everywhere.
class Space {
 public:
  Space(const TetMesh& mesh, SpaceKind kind, int order = 0, std::vector<std::int8_t> entity_signs = {});

  SpaceKind kind() const { return kind_; }
  int order() const { return order_; }
  const TetMesh& mesh() const { return *mesh_; }

  std::size_t num_dofs() const { return num_dofs_; }
  std::size_t num_free() const { return free_.size(); }
  LocalDofs local_dofs(std::size_t cell) const;

  bool is_boundary(std::size_t dof) const { return boundary_[dof] != 0; }
  const std::vector<int>& boundary_dofs() const { return boundary_list_; }
  /// Interior DOFs in ascending order: the numbering of the H_0 subspace.
  const std::vector<int>& free_dofs() const { return free_; }
  /// Position of `dof` in free_dofs(), or -1 for boundary DOFs.
  int free_index(std::size_t dof) const { return free_index_[dof]; }
  double entity_sign(std::size_t dof) const { return signs_.empty() ? 1.0 : signs_[dof]; }
  const std::vector<std::int8_t>& entity_signs() const { return signs_; }

  Vector restrict(const Vector& full) const;
  Vector extend(const Vector& free) const;
  /// Selection matrix (num_free x num_dofs).
  SparseMatrix restriction() const;

 private:
  const TetMesh* mesh_;
  SpaceKind kind_;
  int order_;
  std::size_t num_dofs_ = 0;
  std::vector<std::int8_t> signs_;
  std::vector<std::uint8_t> boundary_;
  std::vector<int> boundary_list_;
  std::vector<int> free_;
  std::vector<int> free_index_;
};

/// Coefficients of a discrete field in a space (full numbering, boundary
/// DOFs included).
struct FieldVector {
  const Space* space = nullptr;
  Vector coeffs;

  FieldVector() = default;
  explicit FieldVector(const Space& s) : space(&s), coeffs(Vector::Zero(static_cast<Eigen::Index>(s.num_dofs()))) {}
  FieldVector(const Space& s, Vector c);

  Eigen::Index size() const { return coeffs.size(); }
};

/// Closed-form vector field of (x, t) with optional derivatives.
struct AnalyticField {
  using VecFn = std::function<Vec3(const Vec3&, double)>;
  using ScalarFn = std::function<double(const Vec3&, double)>;

  VecFn value;
  VecFn curl;
  ScalarFn div;
  VecFn dt;

  Vec3 operator()(const Vec3& x, double t = 0.0) const { return value(x, t); }

  static AnalyticField zero();
  static AnalyticField constant(const Vec3& c);
};

/// Closed-form scalar field of (x, t) with optional gradient.
struct ScalarField {
  std::function<double(const Vec3&, double)> value;
  std::function<Vec3(const Vec3&, double)> grad;

  double operator()(const Vec3& x, double t = 0.0) const { return value(x, t); }

  static ScalarField zero();
};

/// Basis values at one point of one cell, mapped to physical space.
/// Lagrange: `scalar` and `grad`; DG: `scalar`; Nedelec: `value` and `curl`;
/// Raviart-Thomas: `value` and `div`. Orientation signs are included.
struct BasisValues {
  int count = 0;
  std::array<double, 6> scalar{};
  std::array<Vec3, 6> value{};
  std::array<Vec3, 6> grad{};
  std::array<Vec3, 6> curl{};
  std::array<double, 6> div{};
};

/// Evaluate the basis of `space` on `cell` at a point of the reference
/// tetrahedron, through the affine (Lagrange, DG), covariant Piola (Nedelec)
/// or contravariant Piola (Raviart-Thomas) map. Throws InvalidArgument for a
/// point outside the reference cell.
BasisValues eval_basis(const Space& space, std::size_t cell, const Vec3& ref_point);

/// Whether the interpolant should zero the boundary DOFs (H_0 subspace).
enum class Boundary { Keep, Zero };

FieldVector interpolate_lagrange(const Space& space, const ScalarField& f, double t = 0.0,
                                 Boundary bc = Boundary::Keep);
/// Edge-moment interpolant. `degree` is the exactness of the edge rule
/// (defaults to 2k+2).
FieldVector interpolate_nedelec(const Space& space, const AnalyticField& v, double t = 0.0,
                                Boundary bc = Boundary::Keep, int degree = -1);
/// Face-moment interpolant. `degree` is the exactness of the face rule
/// (defaults to 2k+2).
FieldVector interpolate_rt(const Space& space, const AnalyticField& b, double t = 0.0,
                           Boundary bc = Boundary::Keep, int degree = -1);

/// Value of a discrete vector field (Nedelec or RT) at a reference point.
Vec3 evaluate(const FieldVector& field, std::size_t cell, const Vec3& ref_point);
/// Value of a discrete scalar field (Lagrange or DG) at a reference point.
double evaluate_scalar(const FieldVector& field, std::size_t cell, const Vec3& ref_point);
/// Curl of a Nedelec field (constant per cell at k = 0).
Vec3 evaluate_curl(const FieldVector& field, std::size_t cell, const Vec3& ref_point);

/// ||v_h - v(t)||_{L^2} by quadrature of the given degree.
double l2_error(const FieldVector& vh, const AnalyticField& v, double t, int degree = 6);
/// ||curl v_h - curl v(t)||_{L^2}; needs v.curl.
double curl_error(const FieldVector& vh, const AnalyticField& v, double t, int degree = 6);
double l2_error(const FieldVector& ph, const ScalarField& p, double t, int degree = 6);

}  // namespace smhd
