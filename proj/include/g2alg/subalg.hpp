#pragma once

#include <vector>

#include "g2alg/cross.hpp"
#include "g2alg/form2.hpp"
#include "g2alg/linalg.hpp"
#include "g2alg/report.hpp"

namespace g2alg {

/// A list of 2-forms spanning a Lie subalgebra of Lambda^2, together with
/// the structure constants of the bracket in that basis:
///   [B_i, B_j] = sum_k c_ijk B_k  (computed by least squares, so the
/// closure residual measures how much of each bracket escapes the span).
struct Subalgebra {
  std::vector<Form2> basis;
  /// Flat c_ijk, k fastest; dimensions n x n x n with n = basis.size().
  std::vector<double> structure;
  double closure_residual = 0.0;

  int dim() const { return static_cast<int>(basis.size()); }
  double c(int i, int j, int k) const {
    const int n = dim();
    return structure[static_cast<std::size_t>((i * n + j) * n + k)];
  }
};

/// Computes structure constants and closure residual for an arbitrary
/// basis of 2-forms.
Subalgebra make_subalgebra(std::vector<Form2> basis);

/// Lambda^2(P) with basis {v^w, w^u, u^v}.  Under this library's bracket
/// convention the constants are the anticyclic so(3) ones:
/// [X_1, X_2] = -X_3 and cyclic, i.e. c_123 = -1.
Subalgebra lambda2_of_plane(const AssociativePlane& p);

/// Psi(P) with the unit basis {Psi_vw / 2, Psi_wu / 2, -Psi_uv / 2}; the
/// sign on the third element is what makes the constants the cyclic so(3)
/// ones ([Y_1, Y_2] = Y_3).  Requires an associative plane: closure fails
/// for a generic 3-plane.  Throws std::invalid_argument when the carried
/// basis is not associative.
Subalgebra psi_of_plane(const AssociativePlane& p);

struct ThetaDecomposition {
  Subalgebra lambda2P;  ///< 3 elements
  Subalgebra psiP;      ///< 3 elements
  Subalgebra theta;     ///< all 6, with the full 6x6x6 constants
  /// max norm over the nine brackets [Lambda^2(P)_i, Psi(P)_j]
  double cross_bracket_residual = 0.0;
  /// max |<Lambda^2(P)_i, Psi(P)_j>| over the nine pairs, unit-normalized
  double orthogonality_residual = 0.0;
};

/// Theta(P) = Lambda^2(P) + Psi(P), a 6-dimensional subalgebra isomorphic
/// to so(4) = so(3) + so(3): the two factors commute elementwise and are
/// mutually orthogonal.
ThetaDecomposition theta_of_plane(const AssociativePlane& p);

struct ThetaIntersection {
  /// 6 when the planes coincide; otherwise 0 or 1.
  int dim = 0;
  std::vector<Form2> generators;
  std::vector<double> principal_angles;
  bool planes_equal = false;
  /// When dim == 1: the unit vector v spanning P and Q's common line.
  Vec7 shared_direction = Vec7::Zero();
  /// When dim == 1: angle between the generator and v _| phi.
  double generator_angle = 0.0;
};

/// Intersection of Theta(P) and Theta(Q) inside the 21-dimensional space of
/// 2-forms.  For distinct planes the result is (P n Q) _| phi: trivial when
/// the planes meet only at 0, and the line spanned by v _| phi when they
/// share the direction v.  Throws MarginalNumericsError when a principal
/// angle lands in the guard band around the decision threshold.
ThetaIntersection theta_intersect(const AssociativePlane& p, const AssociativePlane& q);

/// For a subspace V of R^7 checks dim( Lambda^2(V) n (V _| phi) ): zero for
/// every proper subspace, and the full 7-dimensional Lambda^2_7 when
/// V = R^7.  Throws std::invalid_argument on a dependent spanning set.
IdentityReport proper_subspace_check(const std::vector<Vec7>& v);

/// For an associative plane P, builds the self-dual 2-forms of the oriented
/// complement P^perp (orientation chosen so vol_P ^ vol_{P^perp} = vol) and
/// checks that:
///  (a) Lambda^2_+(P^perp) lies inside Lambda^2_14, and
///  (b) neither Lambda^2(P) nor Psi(P) does: each has basis elements with a
///      nonzero Lambda^2_7 part.
/// If the self-dual forms were to fail while the anti-self-dual ones pass,
/// the report says so explicitly instead of silently swapping orientations.
IdentityReport coassoc_selfdual_check(const AssociativePlane& p);

}  // namespace g2alg
