#pragma once

#include <vector>

#include "g2alg/form2.hpp"
#include "g2alg/types.hpp"

namespace g2alg {

/// Coordinates of a 2-form in the 21 upper-triangle slots (i < j, row-major).
/// The embedding scales every norm by 1/sqrt(2), so principal angles between
/// coordinate spans equal angles between the 2-form spans.
Eigen::Matrix<double, 21, 1> form2_coords(const Form2& x);
Form2 form2_from_coords(const Eigen::Matrix<double, 21, 1>& c);

/// 21 x 7 matrix whose columns are the coordinates of e_i _| phi.
Eigen::MatrixXd lambda27_coord_basis();

/// 21 x 14 orthonormal coordinate basis of Lambda^2_14, obtained by
/// projecting the 21 coordinate 2-forms and rank-revealing the result.
Eigen::MatrixXd g2_coord_basis();

/// Orthonormal basis of the column span (SVD, columns with
/// sigma > rank_tol * sigma_max kept).
Eigen::MatrixXd orthonormal_columns(const Eigen::MatrixXd& a, double rank_tol = 1e-10);

/// Principal angles between the column spans of two matrices (orthonormalized
/// internally), ascending.  Small angles are refined through the projection
/// residual so values near zero are trustworthy down to ~1e-14.
std::vector<double> principal_angles(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b);

struct SubspaceIntersection {
  int dim = 0;
  /// Orthonormal basis of the (numerical) intersection, one column per
  /// shared direction; taken from the principal vectors on the A side.
  Eigen::MatrixXd basis;
  std::vector<double> angles;
  /// Set when an angle falls between the shared-direction threshold and
  /// 100x it: the dimension decision is then ambiguous.
  bool marginal = false;
};

/// Numerical intersection of two column spans: principal directions whose
/// angle is below shared_angle_tol.
SubspaceIntersection intersect_subspaces(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b,
                                         double shared_angle_tol = tol::kSharedDirectionAngle);

}  // namespace g2alg
