#include "smhd/linear_solver.hpp"

#include <Eigen/SparseCholesky>
#include <Eigen/SparseLU>
#ifdef SMHD_HAVE_UMFPACK
#include <Eigen/UmfPackSupport>
#endif

#include "smhd/error.hpp"

namespace smhd {

struct SparseLu::Impl {
#ifdef SMHD_HAVE_UMFPACK
  Eigen::UmfPackLU<SparseMatrix> lu;
#else
  Eigen::SparseLU<SparseMatrix, Eigen::COLAMDOrdering<int>> lu;
#endif
  SparseMatrix matrix;  // UMFPACK solves read the factorised matrix
  bool analysed = false;

#ifdef SMHD_HAVE_UMFPACK
  // The systems are structurally symmetric with mostly nonzero diagonal
  // blocks; a symmetric ordering of A + A^T fills in far less.
  Impl() { lu.umfpackControl()(UMFPACK_STRATEGY) = UMFPACK_STRATEGY_SYMMETRIC; }
#endif
};

const char* sparse_lu_backend() {
#ifdef SMHD_HAVE_UMFPACK
  return "umfpack";
#else
  return "eigen-sparselu";
#endif
}

namespace {

bool same_pattern(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols() || a.nonZeros() != b.nonZeros()) return false;
  for (Eigen::Index j = 0; j <= a.outerSize(); ++j)
    if (a.outerIndexPtr()[j] != b.outerIndexPtr()[j]) return false;
  for (Eigen::Index k = 0; k < a.nonZeros(); ++k)
    if (a.innerIndexPtr()[k] != b.innerIndexPtr()[k]) return false;
  return true;
}

}  // namespace

SparseLu::SparseLu() : impl_(std::make_unique<Impl>()) {}

SparseLu::SparseLu(const SparseMatrix& a, std::string label) : impl_(std::make_unique<Impl>()), label_(std::move(label)) {
  factorize(a);
}

SparseLu::~SparseLu() = default;
SparseLu::SparseLu(SparseLu&&) noexcept = default;
SparseLu& SparseLu::operator=(SparseLu&&) noexcept = default;

void SparseLu::factorize(const SparseMatrix& a) {
  if (a.rows() != a.cols()) throw SolverError("SparseLu: " + label_ + " is not square");
  rows_ = a.rows();
  if (rows_ == 0) return;
  SparseMatrix m = a;
  m.makeCompressed();
  const bool reuse = impl_->analysed && same_pattern(m, impl_->matrix);
  impl_->matrix = std::move(m);
  if (!reuse) {
    impl_->lu.analyzePattern(impl_->matrix);
    impl_->analysed = true;
  }
  impl_->lu.factorize(impl_->matrix);
  if (impl_->lu.info() != Eigen::Success) throw SolverError("SparseLu: factorisation of " + label_ + " failed (singular?)");
}

Vector SparseLu::solve(const Vector& rhs) const {
  if (rhs.size() != rows_) throw SolverError("SparseLu: right-hand side has the wrong length for " + label_);
  if (rows_ == 0) return Vector();
  Vector x = impl_->lu.solve(rhs);
  if (impl_->lu.info() != Eigen::Success || !x.allFinite()) throw SolverError("SparseLu: solve with " + label_ + " failed");
  return x;
}

struct SparseCholesky::Impl {
  Eigen::SimplicialLDLT<SparseMatrix> llt;
};

SparseCholesky::SparseCholesky() : impl_(std::make_unique<Impl>()) {}

SparseCholesky::SparseCholesky(const SparseMatrix& a, std::string label)
    : impl_(std::make_unique<Impl>()), label_(std::move(label)), rows_(a.rows()) {
  if (a.rows() != a.cols()) throw SolverError("SparseCholesky: " + label_ + " is not square");
  if (rows_ == 0) return;
  impl_->llt.compute(a);
  if (impl_->llt.info() != Eigen::Success) throw SolverError("SparseCholesky: factorisation of " + label_ + " failed");
  if ((impl_->llt.vectorD().array() <= 0.0).any())
    throw SolverError("SparseCholesky: " + label_ + " is not positive definite");
}

SparseCholesky::~SparseCholesky() = default;
SparseCholesky::SparseCholesky(SparseCholesky&&) noexcept = default;
SparseCholesky& SparseCholesky::operator=(SparseCholesky&&) noexcept = default;

Vector SparseCholesky::solve(const Vector& rhs) const {
  if (rhs.size() != rows_) throw SolverError("SparseCholesky: right-hand side has the wrong length for " + label_);
  if (rows_ == 0) return Vector();
  Vector x = impl_->llt.solve(rhs);
  if (impl_->llt.info() != Eigen::Success || !x.allFinite()) throw SolverError("SparseCholesky: solve with " + label_ + " failed");
  return x;
}

}  // namespace smhd
