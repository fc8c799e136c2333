#pragma once

#include <memory>
#include <string>

#include "smhd/types.hpp"

namespace smhd {

/// Direct sparse factorisation of a general square matrix (UMFPACK when
/// available, Eigen's SparseLU otherwise). The pattern analysis is kept, so
/// refactorising a matrix with the same sparsity pattern is cheaper.
class SparseLu {
 public:
  SparseLu();
  explicit SparseLu(const SparseMatrix& a, std::string label = "matrix");
  ~SparseLu();
  SparseLu(SparseLu&&) noexcept;
  SparseLu& operator=(SparseLu&&) noexcept;

  /// Factorise `a`; reuses the symbolic analysis when the pattern is unchanged.
  void factorize(const SparseMatrix& a);
  Vector solve(const Vector& rhs) const;
  Eigen::Index rows() const { return rows_; }

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
  std::string label_;
  Eigen::Index rows_ = 0;
};

/// Sparse Cholesky (LDL^T) of a symmetric positive definite matrix.
class SparseCholesky {
 public:
  SparseCholesky();
  explicit SparseCholesky(const SparseMatrix& a, std::string label = "matrix");
  ~SparseCholesky();
  SparseCholesky(SparseCholesky&&) noexcept;
  SparseCholesky& operator=(SparseCholesky&&) noexcept;

  Vector solve(const Vector& rhs) const;
  Eigen::Index rows() const { return rows_; }

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
  std::string label_;
  Eigen::Index rows_ = 0;
};

/// Name of the backend used by SparseLu.
const char* sparse_lu_backend();

}  // namespace smhd
