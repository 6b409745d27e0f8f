#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "g2alg/report.hpp"
#include "g2alg/types.hpp"

namespace g2alg {

/// A fully antisymmetric k-form on R^7, 0 <= k <= 7, stored densely by
/// strictly increasing index tuples (C(7,k) coefficients).  Indices are
/// 1-based everywhere in this API.
///
/// Conventions, fixed once for the whole library:
///  * orientation: vol = e1 ^ e2 ^ ... ^ e7;
///  * wedge uses the determinant normalization, so
///    (u ^ v)(x, y) = <u,x><v,y> - <u,y><v,x> for 1-forms;
///  * interior product: (v _| a)(x2,...,xk) = a(v, x2, ..., xk).
///
/// All operations are exact on integer coefficients: they only add and
/// multiply stored values, and the structure tensors have entries in
/// {-1, 0, 1}.
class Form {
 public:
  explicit Form(int degree);

  int degree() const { return degree_; }
  int coefficient_count() const { return static_cast<int>(coeffs_.size()); }

  /// Coefficient at the canonical slot for a strictly increasing tuple.
  double& coeff(std::span<const int> increasing);
  double coeff(std::span<const int> increasing) const;

  /// Evaluate at an arbitrary index tuple: resolves the permutation sign,
  /// returns 0 when an index repeats.
  double value(std::span<const int> indices) const;
  double value(std::initializer_list<int> indices) const;

  /// Set through an arbitrary tuple; the canonical coefficient receives
  /// sign(permutation) * v.
  void set(std::span<const int> indices, double v);
  void set(std::initializer_list<int> indices, double v);

  double& raw(int slot) { return coeffs_[static_cast<std::size_t>(slot)]; }
  double raw(int slot) const { return coeffs_[static_cast<std::size_t>(slot)]; }

  /// The increasing tuple stored at a slot.
  std::vector<int> slot_indices(int slot) const;

  Form& operator+=(const Form& o);
  Form& operator-=(const Form& o);
  Form& operator*=(double s);
  friend Form operator+(Form a, const Form& b) { return a += b; }
  friend Form operator-(Form a, const Form& b) { return a -= b; }
  friend Form operator*(double s, Form a) { return a *= s; }

  double max_abs() const;
  bool operator==(const Form& o) const { return degree_ == o.degree_ && coeffs_ == o.coeffs_; }

 private:
  int degree_;
  std::vector<double> coeffs_;
};

/// The associative 3-form phi of the standard structure, with the seven
/// coefficients  e123 - e167 - e527 - e563 - e415 - e426 - e437.
Form standard_phi();

/// The coassociative 4-form psi = *phi, with coefficients
/// e4567 - e4523 - e4163 - e4127 - e2637 - e1537 - e1526.
Form standard_psi();

/// Hodge star for the orientation e1^...^e7.  Involutive on every degree
/// since (-1)^{k(7-k)} = +1 in dimension 7.
Form hodge_star(const Form& a);

/// Wedge product with the determinant normalization.  Throws on degree
/// overflow (j + k > 7).
Form wedge(const Form& a, const Form& b);

/// Interior product (v _| a)(x2,...,xk) = a(v, x2,...,xk).  Throws for k = 0.
Form interior(const Vec7& v, const Form& a);

/// Degree-1 form with the coordinates of v (metric identification).
Form one_form(const Vec7& v);

/// Dense integer tables for phi and psi, used wherever exactness matters.
/// Lookup indices are 1-based.
class StructureTensors {
 public:
  static const StructureTensors& standard();

  int phi(int i, int j, int k) const { return phi_[idx3(i, j, k)]; }
  int psi(int i, int j, int k, int l) const { return psi_[idx4(i, j, k, l)]; }

  /// Copy with the phi coefficient of one index triple negated (coherently
  /// across all permutations).  Diagnostic tool: a corrupted tensor must
  /// make the contraction identities fail with a concrete witness tuple.
  StructureTensors with_phi_sign_flipped(int i, int j, int k) const;

 private:
  StructureTensors() = default;
  static int idx3(int i, int j, int k) { return ((i - 1) * 7 + (j - 1)) * 7 + (k - 1); }
  static int idx4(int i, int j, int k, int l) {
    return (((i - 1) * 7 + (j - 1)) * 7 + (k - 1)) * 7 + (l - 1);
  }

  std::array<std::int8_t, 343> phi_{};
  std::array<std::int8_t, 2401> psi_{};
};

/// Exhaustively verify, in integer arithmetic, the five contraction
/// identity families relating phi and psi:
///   phi_ijp phi_abp  = d_ia d_jb - d_ib d_ja - psi_ijab          (2401 tuples)
///   phi_ijp psi_abcp = d_ia phi_jbc + ... - d_jc phi_abi         (16807 tuples)
///   phi_ipq psi_abpq = -4 phi_iab                                (343 tuples)
///   psi_ijkp psi_abcp = (phi phi and delta/psi expansion)        (117649 tuples)
///   psi_ijpq psi_abpq = 4 d_ia d_jb - 4 d_ib d_ja - 2 psi_ijab   (2401 tuples)
/// Every tuple of free indices is checked; any deviation is reported with
/// the first witness tuple.
IdentityReport verify_contraction_identities(const StructureTensors& t);
IdentityReport verify_contraction_identities();

}  // namespace g2alg
