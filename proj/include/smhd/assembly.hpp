#pragma once

#include <array>
#include <vector>

#include <Eigen/Core>

#include "smhd/fem_spaces.hpp"
#include "smhd/quadrature.hpp"

namespace smhd {

/// Execution policy for cell loops. `Serial` is the reference implementation;
/// `Parallel` computes per-cell blocks with OpenMP and scatters them in cell
/// order, so both produce bitwise identical results.
enum class Exec { Serial, Parallel };

/// Dense contribution of one cell to a global matrix (at most 6 x 6).
struct CellBlock {
  int rows = 0;
  int cols = 0;
  std::array<int, 6> row_index{};
  std::array<int, 6> col_index{};
  Eigen::Matrix<double, 6, 6> values = Eigen::Matrix<double, 6, 6>::Zero();
};

/// Dense contribution of one cell to a global vector.
struct CellVector {
  int rows = 0;
  std::array<int, 6> row_index{};
  std::array<double, 6> values{};
};

namespace kernels {

/// Fill one CellBlock per cell with `fn(cell, block)`.
template <class Block, class Fn>
std::vector<Block> compute_cell_blocks(std::size_t num_cells, Fn&& fn, Exec exec) {
  std::vector<Block> blocks(num_cells);
  const auto n = static_cast<std::ptrdiff_t>(num_cells);
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t c = 0; c < n; ++c) fn(static_cast<std::size_t>(c), blocks[static_cast<std::size_t>(c)]);
  } else {
    for (std::ptrdiff_t c = 0; c < n; ++c) fn(static_cast<std::size_t>(c), blocks[static_cast<std::size_t>(c)]);
  }
  return blocks;
}

SparseMatrix scatter(const std::vector<CellBlock>& blocks, Eigen::Index rows, Eigen::Index cols);
Vector scatter(const std::vector<CellVector>& blocks, Eigen::Index rows);

}  // namespace kernels

/// (u, v) for u, v in `space`. Full numbering; restrict with Space::restriction().
SparseMatrix mass_matrix(const Space& space, int degree = -1, Exec exec = Exec::Parallel);
/// (w_j, w_i) with w_i in `test`, w_j in `trial`; both vector-valued spaces.
SparseMatrix mixed_mass_matrix(const Space& test, const Space& trial, int degree = -1, Exec exec = Exec::Parallel);
/// a(u, v) = (curl u, curl v) on a Nedelec space.
SparseMatrix curl_curl_matrix(const Space& nedelec, int degree = -1, Exec exec = Exec::Parallel);
/// (grad p, grad q) on a Lagrange space.
SparseMatrix lagrange_stiffness(const Space& lagrange, int degree = -1, Exec exec = Exec::Parallel);

/// Coupling matrices of the complex.
struct MixedMatrices {
  SparseMatrix G;  ///< (grad Q_j, v_i): Nedelec x Lagrange
  SparseMatrix K;  ///< (B_j, curl k_i): Nedelec x RT, so (B, curl k) = k^T K B
  SparseMatrix D;  ///< (div B_j, q_i): DG x RT
};
MixedMatrices mixed_matrices(const Space& lagrange, const Space& nedelec, const Space& rt, const Space& dg,
                             int degree = -1, Exec exec = Exec::Parallel);

/// Load vector (a_h x b_h, w_i) for w_i in `test`; a_h and b_h may live in
/// Nedelec or RT spaces.
Vector cross_form(const FieldVector& a, const FieldVector& b, const Space& test, int degree = -1,
                  Exec exec = Exec::Parallel);

enum class CrossArgument { First, Second };

/// Derivative of cross_form with respect to one argument: for `First` the
/// matrix [i, j] = (w_j x b_h, w_i) with w_j in a's space; for `Second`
/// [i, k] = (a_h x w_k, w_i) with w_k in b's space.
SparseMatrix cross_jacobian(const FieldVector& a, const FieldVector& b, const Space& test, CrossArgument wrt,
                            int degree = -1, Exec exec = Exec::Parallel);

/// (f(t), w_i) for w_i in a vector-valued `test` space.
Vector load_vector(const Space& test, const AnalyticField& f, double t, int degree = -1, Exec exec = Exec::Parallel);

}  // namespace smhd
