#pragma once

#include "g2alg/forms.hpp"
#include "g2alg/types.hpp"

namespace g2alg {

/// A 2-form on R^7 stored as the 7x7 skew-symmetric matrix of its
/// components X_ij = X(e_i, e_j); it doubles as a skew-adjoint operator.
///
/// Sign conventions, fixed here and relied on by every identity in the
/// test suite:
///  * components:   (u ^ v)_ij = u_i v_j - u_j v_i,
///                  (u _| phi)_ij = u_p phi_pij;
///  * operator:     X(u)_i = X_ik u_k  (matrix times column vector);
///  * bracket:      [X, Y] = XY - YX on the component matrices;
///  * inner product: <X, Y> = sum_ij X_ij Y_ij (full contraction), so
///    |u ^ v| = sqrt(2) for an orthonormal pair and |Psi_uv| = 2.
class Form2 {
 public:
  Form2() : m_(Mat7::Zero()) {}

  static Form2 zero() { return Form2(); }

  /// (u ^ v)_ij = u_i v_j - u_j v_i.
  static Form2 wedge(const Vec7& u, const Vec7& v) {
    return Form2(u * v.transpose() - v * u.transpose());
  }

  /// u _| phi, the image of u under the isomorphism R^7 -> Lambda^2_7.
  static Form2 interior_phi(const Vec7& u);

  /// Validates skewness to tol::kSkewRel * |m| and symmetrizes the rounding
  /// noise away.  Throws std::invalid_argument on genuinely non-skew input.
  static Form2 from_matrix(const Mat7& m, double rel_tol = tol::kSkewRel);

  /// No validation; for internal use where skewness holds by construction.
  static Form2 from_matrix_unchecked(const Mat7& m) { return Form2(m); }

  const Mat7& matrix() const { return m_; }

  /// Component X_ij, 1-based indices.
  double operator()(int i, int j) const { return m_(i - 1, j - 1); }

  /// The operator action X(u) = X_ik u_k.
  Vec7 apply(const Vec7& u) const { return m_ * u; }

  double norm() const { return m_.norm(); }

  Form2& operator+=(const Form2& o) {
    m_ += o.m_;
    return *this;
  }
  Form2& operator-=(const Form2& o) {
    m_ -= o.m_;
    return *this;
  }
  Form2& operator*=(double s) {
    m_ *= s;
    return *this;
  }
  friend Form2 operator+(Form2 a, const Form2& b) { return a += b; }
  friend Form2 operator-(Form2 a, const Form2& b) { return a -= b; }
  friend Form2 operator*(double s, Form2 a) { return a *= s; }
  friend Form2 operator-(const Form2& a) { return Form2(-a.m_); }

 private:
  explicit Form2(const Mat7& m) : m_(m) {}
  Mat7 m_;
};

/// [X, Y] = XY - YX on component matrices.  Output is skew.
inline Form2 bracket(const Form2& x, const Form2& y) {
  return Form2::from_matrix_unchecked(x.matrix() * y.matrix() - y.matrix() * x.matrix());
}

/// Full-contraction inner product sum_ij X_ij Y_ij.
inline double inner(const Form2& x, const Form2& y) {
  return x.matrix().cwiseProduct(y.matrix()).sum();
}

/// Conversions between the matrix and coefficient representations.
Form to_form(const Form2& x);
Form2 to_form2(const Form& f);

}  // namespace g2alg
