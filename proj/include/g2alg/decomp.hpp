#pragma once

#include <cstdint>

#include "g2alg/form2.hpp"
#include "g2alg/report.hpp"
#include "g2alg/rng.hpp"

namespace g2alg {

/// The orthogonal splitting Lambda^2 = Lambda^2_7 + Lambda^2_14 of 2-forms
/// on R^7, where Lambda^2_7 = { u _| phi } and Lambda^2_14 is the Lie
/// algebra of derivations preserving the cross product.

/// (X_7)_ij = u_p phi_pij with u_p = (1/6) X_ij phi_ijp.  Idempotent; the
/// image satisfies psi_ijpq (X_7)_pq = -4 (X_7)_ij.
Form2 project7(const Form2& x);

/// X - project7(X); the image satisfies X_pq phi_pqk = 0 for all k.
Form2 project14(const Form2& x);

struct SplitForm2 {
  Form2 part7;
  Form2 part14;
};
SplitForm2 split(const Form2& x);

/// The vector u with u_p = (1/6) X_ij phi_ijp; inverts X = u _| phi on
/// Lambda^2_7.
Vec7 project7_vector(const Form2& x);

/// The raw contraction (psi . X)_ij = psi_ijpq X_pq, which acts as -4 on
/// Lambda^2_7 and +2 on Lambda^2_14.
Form2 raw_psi_contraction(const Form2& x);

/// The linear map Psi(X) = *(X ^ phi) = -2 pi_7(X) + pi_14(X); equals
/// (1/2) psi_ijpq X_pq in components.
Form2 psi_map(const Form2& x);

/// Psi_uv = v _| u _| psi = *(u ^ v ^ phi); components u_p v_q psi_pqij.
Form2 psi_pair(const Vec7& u, const Vec7& v);

struct MembershipResiduals {
  /// max_k |X_pq phi_pqk|
  double contraction;
  /// max_ijk |X_ip phi_pjk + X_jp phi_ipk + X_kp phi_ijp|
  double derivation;
};
MembershipResiduals g2_membership_residuals(const Form2& x);

/// True iff both membership criteria hold within tol (absolute; callers
/// usually pass tol = 1e-9 * |X|).  The two criteria must agree: if one
/// passes while the other misses by more than a factor of 100, a
/// std::runtime_error is raised, since that indicates a bug rather than a
/// borderline input.
bool is_in_g2(const Form2& x, double tolerance);
inline bool is_in_g2(const Form2& x) {
  return is_in_g2(x, tol::kMembershipRel * std::max(1.0, x.norm()));
}

/// Random element of Lambda^2_14: project14 of a Gaussian skew matrix.
Form2 random_g2_element(SplitMix64& rng);

/// Randomized verification of the bracket and Psi identities:
///   * [X, u _| phi] = X(u) _| phi for X in Lambda^2_14;
///   * [u _| phi, v _| phi] = -(u ^ v) - 2 Psi_uv, and its pi_7 / pi_14 parts;
///   * u ^ v = (u x v) _| phi + Psi_uv;
///   * Psi_uv = -2 (u ^ v)_7 + (u ^ v)_14;
///   * <Psi_uv, Psi_wy> = 4 (<u,w><v,y> - <u,y><v,w>) - 2 psi(u,v,w,y),
///     and <Psi_uv, w ^ y> = 2 psi(u,v,w,y);
///   * for orthogonal u, v, w (drawn unnormalized so the |w|^2 factors are
///     exercised):
///       (u x w) x (v x w)   = 2 phi(u,v,w) w - |w|^2 u x v,
///       Psi_{(uxw)(vxw)}    = psi(u,v,w) ^ w + |w|^2 u ^ v - phi(u,v,w) w _| phi,
///       (u x w) ^ (v x w)   = phi(u,v,w) w _| phi + psi(u,v,w) ^ w + |w|^2 Psi_uv,
///       [Psi_uw, Psi_vw]    = -|w|^2 Psi_uv - Psi_{(uxw)(vxw)};
///   * X(u x y, v x y) = |y|^2 X(u,v) + X(y, (u x v) x y) for X in
///     Lambda^2_14 and orthogonal u, v, y.
/// Reports the max relative deviation per identity across all trials.
IdentityReport verify_psi_identities(int trials, std::uint64_t seed);

/// Randomized verification of the bracket structure of the splitting:
///   * [X, u _| phi] = X(u) _| phi and, consequently,
///     [Lambda^2_14, Lambda^2_7] stays inside Lambda^2_7;
///   * the three lines
///       [u _| phi, v _| phi]        = -(u ^ v) - 2 Psi_uv,
///       pi_7 ([u _| phi, v _| phi]) =   u ^ v  -   Psi_uv,
///       pi_14([u _| phi, v _| phi]) = -2 u ^ v -   Psi_uv;
///   * pi_7([u _| phi, v _| phi]) = (u x v) _| phi;
///   * Lambda^2_14 closes under the bracket;
///   * mixed type: for independent u, v both projections of
///     [u _| phi, v _| phi] are nonzero.
IdentityReport verify_bracket_identities(int trials, std::uint64_t seed);

}  // namespace g2alg
