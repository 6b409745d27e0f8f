#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "g2alg/rng.hpp"
#include "g2alg/types.hpp"

namespace g2alg {

/// Seven-dimensional cross product, (u x v)_k = u_p v_q phi_pqk.
Vec7 cross(const Vec7& u, const Vec7& v);

/// phi(u, v, w) = <u x v, w>.
double triple_phi(const Vec7& u, const Vec7& v, const Vec7& w);

/// The vector with components u_i v_j w_k psi_ijkl ("psi with the last
/// index raised").  Vanishes on a triple iff the triple sits inside an
/// associative plane.
Vec7 psi_vector(const Vec7& u, const Vec7& v, const Vec7& w);

/// An ordered orthonormal frame for R^7.  When g2_adapted is set, the
/// frame additionally satisfies
///   e3 = e1 x e2,  e5 = e1 x e4,  e6 = e2 x e4,  e7 = e3 x e4.
struct Frame {
  std::array<Vec7, 7> e;
  bool g2_adapted = false;

  static Frame standard();

  /// Columns are the frame vectors.
  Mat7 as_matrix() const;

  double orthonormality_residual() const;
  /// Max deviation over the four adapted-frame cross relations.
  double adapted_relations_residual() const;
};

/// Completes an orthonormal triple {e1, e2, e4} with <e4, e1 x e2> = 0 to
/// the adapted frame (e1, e2, e1 x e2, e4, e1 x e4, e2 x e4, (e1 x e2) x e4).
/// Throws std::invalid_argument when the preconditions fail.
Frame complete_g2_frame(const Vec7& e1, const Vec7& e2, const Vec7& e4);

/// An associative 3-plane carried by an orthonormal basis (u, v, w) with
/// w = u x v, so the basis is closed under the cross product by
/// construction.
struct AssociativePlane {
  Vec7 u, v, w;
  /// |psi(u,v,w)| recorded when the plane was certified.
  double psi_residual = 0.0;

  Eigen::Matrix<double, 7, 3> basis_matrix() const;
};

/// Tests whether the span of three linearly independent vectors is closed
/// under the cross product.  The span is orthonormalized first; the plane
/// is accepted iff |psi(u,v,w)| <= tol::kAssoc AND u x v lies in the span
/// to the same tolerance (the two characterizations must agree).  Returns
/// the certified basis (u, v, u x v) on success.  Throws
/// std::invalid_argument on a rank-deficient span.
std::optional<AssociativePlane> is_associative(const Vec7& a, const Vec7& b, const Vec7& c,
                                               double* psi_residual_out = nullptr);

/// Seeded random associative plane: a Gaussian orthonormal pair (u, v)
/// together with u x v.  Deterministic for a given generator state.
AssociativePlane random_associative_plane(SplitMix64& rng);

/// A random 3-plane that is (generically) not associative; resamples in the
/// unlikely event the Gaussian span lands near an associative one.
std::array<Vec7, 3> random_generic_plane(SplitMix64& rng, double min_psi_residual = 1e-3);

/// Modified Gram-Schmidt with one re-orthogonalization pass.  Throws
/// std::invalid_argument when the input is rank deficient.
std::vector<Vec7> orthonormalize(std::span<const Vec7> vs);

/// Deterministic orthonormal basis of the orthogonal complement of the
/// span of `vs` (which must itself be orthonormal): standard basis vectors
/// are projected and swept in index order.
std::vector<Vec7> orthogonal_complement(std::span<const Vec7> vs);

}  // namespace g2alg
