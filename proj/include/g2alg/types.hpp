#pragma once

#include <Eigen/Dense>

namespace g2alg {

using Vec7 = Eigen::Matrix<double, 7, 1>;
using Mat7 = Eigen::Matrix<double, 7, 7>;

/// Standard basis vector e_i, 1-based (i in 1..7).
inline Vec7 basis_vector(int i) {
  Vec7 v = Vec7::Zero();
  v(i - 1) = 1.0;
  return v;
}

namespace tol {
/// Orthonormality tolerance for frames and plane bases (inputs normalized first).
inline constexpr double kOrth = 1e-10;
/// Residual bound on |psi(u,v,w)| for an orthonormalized triple to count as associative.
inline constexpr double kAssoc = 1e-9;
/// Default relative tolerance for Lambda^2_14 membership tests.
inline constexpr double kMembershipRel = 1e-9;
/// Relative skewness bound enforced when validating component matrices.
inline constexpr double kSkewRel = 1e-12;
/// A singular value counts as nonzero iff sigma > kRankRel * sigma_max.
inline constexpr double kRankRel = 1e-8;
/// Singular values in [kRankMarginalRel, kRankRel] * sigma_max are flagged, not classified.
inline constexpr double kRankMarginalRel = 1e-10;
/// Principal angle below which two subspaces share a direction.
inline constexpr double kSharedDirectionAngle = 1e-7;
/// All principal angles below this declare two 3-planes equal.
inline constexpr double kSamePlaneAngle = 1e-8;
}  // namespace tol

}  // namespace g2alg
