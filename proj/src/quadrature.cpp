#include "smhd/quadrature.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>

#include "smhd/error.hpp"

namespace smhd {

// Golub-Welsch on the Jacobi matrix of the monic Jacobi polynomials
// P_n^{(alpha,0)} on [-1,1], mapped to [0,1].
void gauss_jacobi01(int m, int alpha, std::vector<double>& nodes, std::vector<double>& weights) {
  if (m < 1) throw InvalidArgument("gauss_jacobi01: need at least one point");
  const double a = alpha;
  const double b = 0.0;
  Eigen::MatrixXd T = Eigen::MatrixXd::Zero(m, m);
  for (int i = 0; i < m; ++i) {
    const double n = i;
    const double s = 2.0 * n + a + b;
    T(i, i) = (s == 0.0) ? (b - a) / (a + b + 2.0) : (b * b - a * a) / (s * (s + 2.0));
    if (i + 1 < m) {
      const double n1 = n + 1.0;
      const double s1 = 2.0 * n1 + a + b;
      const double num = 4.0 * n1 * (n1 + a) * (n1 + b) * (n1 + a + b);
      const double den = s1 * s1 * (s1 + 1.0) * (s1 - 1.0);
      T(i, i + 1) = T(i + 1, i) = std::sqrt(num / den);
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(T);
  // integral of (1-x)^a (1+x)^b over [-1,1]
  const double mu0 = std::pow(2.0, a + b + 1.0) * std::tgamma(a + 1.0) * std::tgamma(b + 1.0) / std::tgamma(a + b + 2.0);
  nodes.resize(m);
  weights.resize(m);
  const double scale = std::pow(0.5, a + 1.0);
  for (int i = 0; i < m; ++i) {
    const double v0 = eig.eigenvectors()(0, i);
    nodes[i] = 0.5 * (eig.eigenvalues()(i) + 1.0);
    weights[i] = mu0 * v0 * v0 * scale;
  }
}

QuadratureRule tet_rule(int degree) {
  const int m = std::max(1, (degree + 2) / 2);
  std::vector<double> xu, wu, xv, wv, xw, ww;
  gauss_jacobi01(m, 2, xu, wu);
  gauss_jacobi01(m, 1, xv, wv);
  gauss_jacobi01(m, 0, xw, ww);
  QuadratureRule q;
  q.degree = 2 * m - 1;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k) {
        const double u = xu[i], v = xv[j], w = xw[k];
        q.points.emplace_back(u, (1.0 - u) * v, (1.0 - u) * (1.0 - v) * w);
        q.weights.push_back(wu[i] * wv[j] * ww[k]);
      }
  return q;
}

QuadratureRule triangle_rule(int degree) {
  const int m = std::max(1, (degree + 2) / 2);
  std::vector<double> xu, wu, xv, wv;
  gauss_jacobi01(m, 1, xu, wu);
  gauss_jacobi01(m, 0, xv, wv);
  QuadratureRule q;
  q.degree = 2 * m - 1;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      q.points.emplace_back(xu[i], (1.0 - xu[i]) * xv[j], 0.0);
      q.weights.push_back(wu[i] * wv[j]);
    }
  return q;
}

QuadratureRule segment_rule(int degree) {
  const int m = std::max(1, (degree + 2) / 2);
  std::vector<double> x, w;
  gauss_jacobi01(m, 0, x, w);
  QuadratureRule q;
  q.degree = 2 * m - 1;
  for (int i = 0; i < m; ++i) {
    q.points.emplace_back(x[i], 0.0, 0.0);
    q.weights.push_back(w[i]);
  }
  return q;
}

}  // namespace smhd
