#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "g2alg/cross.hpp"
#include "g2alg/decomp.hpp"
#include "g2alg/form2.hpp"
#include "g2alg/report.hpp"

namespace g2alg {

/// Raised when a rank or dimension decision falls inside the guard band
/// where neither verdict is trustworthy.
struct MarginalNumericsError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Spectral data of a skew-adjoint operator on R^7: eigenvalues
/// {+-i lambda, +-i nu, +-i mu, 0} with lambda >= nu >= mu >= 0, and an
/// orthonormal frame in which the component matrix is
///   diag( 0, [0 -mu; mu 0], [0 -nu; nu 0], [0 -lambda; lambda 0] ).
struct SkewSpectrum {
  double lambda = 0.0, nu = 0.0, mu = 0.0;
  Frame frame;  ///< not adapted in general
  /// The block pattern above, assembled from (lambda, nu, mu).
  Mat7 block_matrix() const;
};

/// Canonical block form of an arbitrary 2-form, computed through the
/// symmetric positive-semidefinite operator S = -X^2.  Eigenvector choices
/// inside degenerate eigenspaces follow a deterministic selection rule so
/// repeated runs return identical frames.
SkewSpectrum skew_canonical_form(const Form2& x);

struct Lambda7CanonicalForm {
  double lambda = 0.0;
  Frame frame;  ///< adapted; first vector is u/|u| when u != 0
  double pattern_residual = 0.0;
};

/// Canonical form of u _| phi: lambda = |u| and, in the adapted frame
/// completing u/|u|, the component matrix has 2x2 blocks with values
/// (+lambda, +lambda, -lambda) on the (2,3), (4,5), (6,7) pairs.  The sign
/// flip on the last block is forced: rank is 6 whenever u != 0, never 2 or 4.
Lambda7CanonicalForm lambda7_canonical_form(const Vec7& u);

/// The component matrix, in an adapted frame, of an element of
/// Lambda^2_14 with invariants lambda >= nu >= mu >= 0, nu = lambda - mu:
/// entries X_12 = -lambda, X_47 = nu, X_56 = -mu (plus skewness).
Mat7 g2_canonical_matrix(double lambda, double mu);

/// The same element written on the relabeled frame where the matrix is the
/// standard block form diag(0, [0 -mu; mu 0], [0 -nu; nu 0],
/// [0 -lambda; lambda 0]); on the standard basis these span the
/// 2-dimensional maximal abelian subalgebra.
Mat7 torus_matrix(double lambda, double mu);

struct G2CanonicalForm {
  Frame frame;  ///< adapted
  double lambda = 0.0, nu = 0.0, mu = 0.0;
  int rank_class = 0;  ///< 0, 4, or 6
  std::vector<Vec7> kernel_basis;
  double membership_residual = 0.0;
  /// |F^T X F - pattern(lambda, mu)| / |X|
  double reconstruction_residual = 0.0;
  Mat7 block_matrix() const { return g2_canonical_matrix(lambda, mu); }
};

/// Constructive canonical form for X in Lambda^2_14:
///  (1) lambda from the spectrum; if X = 0 the zero case is returned;
///  (2) unit e1 in the top eigenspace, e2 = X(e1)/lambda, e3 = e1 x e2;
///  (3) X restricted to {e1,e2,e3}^perp gives nu;
///  (4) unit e4 in the nu-eigenspace of the restriction, then
///      e5 = e1 x e4, e6 = e2 x e4, e7 = e3 x e4;
///  (5) X_45 and X_46 vanish automatically; if |X_45| > 1e-10 |X| a
///      rotation of the (e1, e2) plane with cot(alpha) = X_46 / X_45 is
///      applied as numerical insurance;
///  (6) mu = -X_56; the invariant lambda = nu + mu is asserted, the rank
///      class in {0, 4, 6} determined, and the kernel extracted
///      ({e3, e5, e6} when mu = 0 < lambda, {e3} when mu > 0).
/// Throws std::invalid_argument when X fails the membership test and
/// std::runtime_error if lambda = nu + mu is violated beyond tolerance.
G2CanonicalForm g2_canonical_form(const Form2& x);

struct RankInfo {
  int rank = 0;
  bool marginal = false;  ///< some singular value landed in the guard band
  std::array<double, 7> singular_values{};
  bool in_g2 = false;
  double membership_residual = 0.0;
  /// For elements of Lambda^2_14 with rank <= 4: whether the kernel carries
  /// a certified associative plane.
  bool kernel_associative = false;
  std::vector<Vec7> kernel_basis;
};

/// Numerical rank via singular values (nonzero iff sigma > 1e-8 sigma_max;
/// the band [1e-10, 1e-8] sigma_max is flagged marginal rather than
/// classified).  For elements of Lambda^2_14 a measured rank of 2 outside
/// the band is a contradiction and raises std::runtime_error.
RankInfo classify_rank(const Form2& x);

struct Rank4BlockForm {
  Frame frame;  ///< adapted; first three vectors span the kernel
  double a = 0.0, b = 0.0, c = 0.0;
  /// |det Y - (a^2+b^2+c^2)^2| / max(1, (a^2+b^2+c^2)^2)
  double det_residual = 0.0;
  double reconstruction_residual = 0.0;
};

/// For X in Lambda^2_14 with rank <= 4: the adapted frame whose first three
/// vectors span ker X, and the parameters (a, b, c) of the 4x4 block
///   [ 0 -a -b -c; a 0 -c b; b c 0 -a; c -b a 0 ],
/// whose determinant is (a^2 + b^2 + c^2)^2 -- which is why rank 2 cannot
/// occur.  Throws std::invalid_argument on precondition violations.
Rank4BlockForm rank4_block_form(const Form2& x);

/// Checks that the two-parameter family t(lambda, mu) = torus_matrix spans
/// a maximal abelian subalgebra of Lambda^2_14: generators commute, belong
/// to Lambda^2_14, the centralizer of the pair inside Lambda^2_14 is
/// exactly 2-dimensional, and sampled commuting elements fall inside
/// span(t).
IdentityReport maximal_torus_check(std::uint64_t seed = 2024);

}  // namespace g2alg
