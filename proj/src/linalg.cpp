#include "g2alg/linalg.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>

#include "g2alg/decomp.hpp"

namespace g2alg {

Eigen::Matrix<double, 21, 1> form2_coords(const Form2& x) {
  Eigen::Matrix<double, 21, 1> c;
  int s = 0;
  for (int i = 0; i < 7; ++i)
    for (int j = i + 1; j < 7; ++j) c(s++) = x.matrix()(i, j);
  return c;
}

Form2 form2_from_coords(const Eigen::Matrix<double, 21, 1>& c) {
  Mat7 m = Mat7::Zero();
  int s = 0;
  for (int i = 0; i < 7; ++i)
    for (int j = i + 1; j < 7; ++j) {
      m(i, j) = c(s);
      m(j, i) = -c(s);
      ++s;
    }
  return Form2::from_matrix_unchecked(m);
}

Eigen::MatrixXd lambda27_coord_basis() {
  Eigen::MatrixXd b(21, 7);
  for (int i = 1; i <= 7; ++i) b.col(i - 1) = form2_coords(Form2::interior_phi(basis_vector(i)));
  return b;
}

Eigen::MatrixXd g2_coord_basis() {
  Eigen::MatrixXd cols(21, 21);
  int s = 0;
  for (int i = 1; i <= 7; ++i)
    for (int j = i + 1; j <= 7; ++j)
      cols.col(s++) = form2_coords(project14(Form2::wedge(basis_vector(i), basis_vector(j))));
  Eigen::MatrixXd on = orthonormal_columns(cols);
  return on;
}

Eigen::MatrixXd orthonormal_columns(const Eigen::MatrixXd& a, double rank_tol) {
  if (a.cols() == 0) return a;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeThinU);
  const auto& sv = svd.singularValues();
  const double smax = sv.size() ? sv(0) : 0.0;
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) > rank_tol * smax) ++rank;
  return svd.matrixU().leftCols(rank);
}

std::vector<double> principal_angles(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  const Eigen::MatrixXd qa = orthonormal_columns(a);
  const Eigen::MatrixXd qb = orthonormal_columns(b);
  if (qa.cols() == 0 || qb.cols() == 0) return {};
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(qa.transpose() * qb,
                                        Eigen::ComputeFullU | Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const int n = static_cast<int>(std::min(qa.cols(), qb.cols()));
  std::vector<double> angles(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    const double c = std::clamp(sv(k), -1.0, 1.0);
    if (c > 0.7) {
      // Near-zero angle: acos of a cosine near 1 is poorly conditioned, so
      // measure the sine via the projection residual instead.
      const Eigen::VectorXd yb = qb * svd.matrixV().col(k);
      const double s = (yb - qa * (qa.transpose() * yb)).norm();
      angles[static_cast<std::size_t>(k)] = std::asin(std::clamp(s, 0.0, 1.0));
    } else {
      angles[static_cast<std::size_t>(k)] = std::acos(c);
    }
  }
  std::sort(angles.begin(), angles.end());
  return angles;
}

SubspaceIntersection intersect_subspaces(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b,
                                         double shared_angle_tol) {
  SubspaceIntersection out;
  const Eigen::MatrixXd qa = orthonormal_columns(a);
  const Eigen::MatrixXd qb = orthonormal_columns(b);
  if (qa.cols() == 0 || qb.cols() == 0) {
    out.basis.resize(a.rows(), 0);
    return out;
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(qa.transpose() * qb,
                                        Eigen::ComputeFullU | Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const int n = static_cast<int>(std::min(qa.cols(), qb.cols()));
  std::vector<int> shared;
  for (int k = 0; k < n; ++k) {
    const double c = std::clamp(sv(k), -1.0, 1.0);
    double angle;
    if (c > 0.7) {
      const Eigen::VectorXd yb = qb * svd.matrixV().col(k);
      const double s = (yb - qa * (qa.transpose() * yb)).norm();
      angle = std::asin(std::clamp(s, 0.0, 1.0));
    } else {
      angle = std::acos(c);
    }
    out.angles.push_back(angle);
    if (angle < shared_angle_tol)
      shared.push_back(k);
    else if (angle < 100.0 * shared_angle_tol)
      out.marginal = true;
  }
  out.dim = static_cast<int>(shared.size());
  out.basis.resize(qa.rows(), out.dim);
  for (int k = 0; k < out.dim; ++k)
    out.basis.col(k) = qa * svd.matrixU().col(shared[static_cast<std::size_t>(k)]);
  std::sort(out.angles.begin(), out.angles.end());
  return out;
}

}  // namespace g2alg
