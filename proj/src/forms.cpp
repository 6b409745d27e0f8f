#include "g2alg/forms.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace g2alg {

namespace {

constexpr int kBinomial7[8] = {1, 7, 21, 35, 35, 21, 7, 1};

int binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return static_cast<int>(r);
}

// Lexicographic rank of a strictly increasing k-tuple from {1..7}.
int rank_tuple(std::span<const int> t) {
  const int k = static_cast<int>(t.size());
  int r = 0;
  int prev = 0;
  for (int pos = 0; pos < k; ++pos) {
    for (int c = prev + 1; c < t[pos]; ++c) r += binom(7 - c, k - pos - 1);
    prev = t[pos];
  }
  return r;
}

// Sorts a copy of the tuple, returning the permutation sign, or 0 if an
// index repeats or falls outside 1..7.
int normalize_tuple(std::span<const int> in, std::vector<int>& out) {
  out.assign(in.begin(), in.end());
  int sign = 1;
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i] < 1 || out[i] > 7) throw std::out_of_range("form index outside 1..7");
    for (std::size_t j = i + 1; j < out.size(); ++j) {
      if (out[i] == out[j]) return 0;
      if (out[i] > out[j]) {
        std::swap(out[i], out[j]);
        sign = -sign;
      }
    }
  }
  return sign;
}

}  // namespace

Form::Form(int degree) : degree_(degree) {
  if (degree < 0 || degree > 7) throw std::invalid_argument("form degree must be in 0..7");
  coeffs_.assign(static_cast<std::size_t>(kBinomial7[degree]), 0.0);
}

double& Form::coeff(std::span<const int> increasing) {
  return coeffs_[static_cast<std::size_t>(rank_tuple(increasing))];
}

double Form::coeff(std::span<const int> increasing) const {
  return coeffs_[static_cast<std::size_t>(rank_tuple(increasing))];
}

double Form::value(std::span<const int> indices) const {
  if (static_cast<int>(indices.size()) != degree_)
    throw std::invalid_argument("index count does not match form degree");
  std::vector<int> sorted;
  const int sign = normalize_tuple(indices, sorted);
  if (sign == 0) return 0.0;
  return sign * coeffs_[static_cast<std::size_t>(rank_tuple(sorted))];
}

double Form::value(std::initializer_list<int> indices) const {
  return value(std::span<const int>(indices.begin(), indices.size()));
}

void Form::set(std::span<const int> indices, double v) {
  if (static_cast<int>(indices.size()) != degree_)
    throw std::invalid_argument("index count does not match form degree");
  std::vector<int> sorted;
  const int sign = normalize_tuple(indices, sorted);
  if (sign == 0) throw std::invalid_argument("cannot set a coefficient at a repeated index");
  coeffs_[static_cast<std::size_t>(rank_tuple(sorted))] = sign * v;
}

void Form::set(std::initializer_list<int> indices, double v) {
  set(std::span<const int>(indices.begin(), indices.size()), v);
}

std::vector<int> Form::slot_indices(int slot) const {
  std::vector<int> t(static_cast<std::size_t>(degree_));
  int r = slot;
  int prev = 0;
  for (int pos = 0; pos < degree_; ++pos) {
    for (int c = prev + 1; c <= 7; ++c) {
      const int block = binom(7 - c, degree_ - pos - 1);
      if (r < block) {
        t[static_cast<std::size_t>(pos)] = c;
        prev = c;
        break;
      }
      r -= block;
    }
  }
  return t;
}

Form& Form::operator+=(const Form& o) {
  if (degree_ != o.degree_) throw std::invalid_argument("degree mismatch");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

Form& Form::operator-=(const Form& o) {
  if (degree_ != o.degree_) throw std::invalid_argument("degree mismatch");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

Form& Form::operator*=(double s) {
  for (double& c : coeffs_) c *= s;
  return *this;
}

double Form::max_abs() const {
  double m = 0.0;
  for (double c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

namespace {

struct Term3 {
  int i, j, k, sign;
};
struct Term4 {
  int i, j, k, l, sign;
};

// phi = e123 - e167 - e527 - e563 - e415 - e426 - e437
constexpr Term3 kPhiTerms[7] = {{1, 2, 3, +1}, {1, 6, 7, -1}, {5, 2, 7, -1}, {5, 6, 3, -1},
                                {4, 1, 5, -1}, {4, 2, 6, -1}, {4, 3, 7, -1}};
// psi = e4567 - e4523 - e4163 - e4127 - e2637 - e1537 - e1526
constexpr Term4 kPsiTerms[7] = {{4, 5, 6, 7, +1}, {4, 5, 2, 3, -1}, {4, 1, 6, 3, -1},
                                {4, 1, 2, 7, -1}, {2, 6, 3, 7, -1}, {1, 5, 3, 7, -1},
                                {1, 5, 2, 6, -1}};

}  // namespace

Form standard_phi() {
  Form phi(3);
  for (const auto& t : kPhiTerms) phi.set({t.i, t.j, t.k}, static_cast<double>(t.sign));
  return phi;
}

Form standard_psi() {
  Form psi(4);
  for (const auto& t : kPsiTerms) psi.set({t.i, t.j, t.k, t.l}, static_cast<double>(t.sign));
  return psi;
}

Form hodge_star(const Form& a) {
  const int k = a.degree();
  Form out(7 - k);
  for (int slot = 0; slot < a.coefficient_count(); ++slot) {
    const double c = a.raw(slot);
    if (c == 0.0) continue;
    const std::vector<int> idx = a.slot_indices(slot);
    std::vector<int> comp;
    comp.reserve(static_cast<std::size_t>(7 - k));
    for (int v = 1; v <= 7; ++v)
      if (std::find(idx.begin(), idx.end(), v) == idx.end()) comp.push_back(v);
    // sign of the permutation (idx, comp) of (1..7): comp is sorted, so count
    // the inversions contributed by idx against comp.
    int inversions = 0;
    for (std::size_t p = 0; p < idx.size(); ++p)
      for (int c2 : comp)
        if (idx[p] > c2) ++inversions;
    // plus inversions inside idx (it is already increasing: none)
    const int sign = (inversions % 2 == 0) ? 1 : -1;
    out.coeff(comp) += sign * c;
  }
  return out;
}

Form wedge(const Form& a, const Form& b) {
  const int j = a.degree();
  const int k = b.degree();
  if (j + k > 7) throw std::invalid_argument("wedge degree overflow");
  Form out(j + k);
  if (j == 0) {
    out = b;
    out *= a.raw(0);
    return out;
  }
  if (k == 0) {
    out = a;
    out *= b.raw(0);
    return out;
  }
  // For each increasing (j+k)-tuple I, sum over splits I = A ⊔ B with the
  // shuffle sign.
  for (int slot = 0; slot < out.coefficient_count(); ++slot) {
    const std::vector<int> I = out.slot_indices(slot);
    const int n = j + k;
    // enumerate j-subsets of positions 0..n-1
    std::vector<int> pick(static_cast<std::size_t>(j));
    for (int p = 0; p < j; ++p) pick[static_cast<std::size_t>(p)] = p;
    double acc = 0.0;
    while (true) {
      std::vector<int> A, B;
      A.reserve(static_cast<std::size_t>(j));
      B.reserve(static_cast<std::size_t>(k));
      std::vector<bool> used(static_cast<std::size_t>(n), false);
      for (int p : pick) used[static_cast<std::size_t>(p)] = true;
      for (int p = 0; p < n; ++p)
        (used[static_cast<std::size_t>(p)] ? A : B).push_back(I[static_cast<std::size_t>(p)]);
      // Shuffle sign: each A-element must jump over every B-element that
      // precedes it in I.
      int inversions = 0;
      int b_before = 0;
      for (int p = 0; p < n; ++p) {
        if (!used[static_cast<std::size_t>(p)])
          ++b_before;
        else
          inversions += b_before;
      }
      const int sign = (inversions % 2 == 0) ? 1 : -1;
      acc += sign * a.coeff(A) * b.coeff(B);
      // next subset
      int p = j - 1;
      while (p >= 0 && pick[static_cast<std::size_t>(p)] == n - j + p) --p;
      if (p < 0) break;
      ++pick[static_cast<std::size_t>(p)];
      for (int q = p + 1; q < j; ++q)
        pick[static_cast<std::size_t>(q)] = pick[static_cast<std::size_t>(q - 1)] + 1;
    }
    out.raw(slot) = acc;
  }
  return out;
}

Form interior(const Vec7& v, const Form& a) {
  const int k = a.degree();
  if (k < 1) throw std::invalid_argument("interior product needs degree >= 1");
  Form out(k - 1);
  std::vector<int> full(static_cast<std::size_t>(k));
  for (int slot = 0; slot < out.coefficient_count(); ++slot) {
    const std::vector<int> J = out.slot_indices(slot);
    double acc = 0.0;
    for (int p = 1; p <= 7; ++p) {
      if (v(p - 1) == 0.0) continue;
      full[0] = p;
      for (int q = 1; q < k; ++q) full[static_cast<std::size_t>(q)] = J[static_cast<std::size_t>(q - 1)];
      acc += v(p - 1) * a.value(full);
    }
    out.raw(slot) = acc;
  }
  return out;
}

Form one_form(const Vec7& v) {
  Form f(1);
  for (int i = 1; i <= 7; ++i) f.set({i}, v(i - 1));
  return f;
}

const StructureTensors& StructureTensors::standard() {
  static const StructureTensors t = [] {
    StructureTensors s;
    auto put3 = [&s](int a, int b, int c, int val) { s.phi_[static_cast<std::size_t>(idx3(a, b, c))] = static_cast<std::int8_t>(val); };
    auto put4 = [&s](int a, int b, int c, int d, int val) {
      s.psi_[static_cast<std::size_t>(idx4(a, b, c, d))] = static_cast<std::int8_t>(val);
    };
    for (const auto& t3 : kPhiTerms) {
      const int v[3] = {t3.i, t3.j, t3.k};
      const int perms[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}};
      for (int p = 0; p < 6; ++p) {
        const int sgn = (p < 3) ? 1 : -1;
        put3(v[perms[p][0]], v[perms[p][1]], v[perms[p][2]], sgn * t3.sign);
      }
    }
    for (const auto& t4 : kPsiTerms) {
      const int v[4] = {t4.i, t4.j, t4.k, t4.l};
      int perm[4] = {0, 1, 2, 3};
      do {
        int inv = 0;
        for (int x = 0; x < 4; ++x)
          for (int y = x + 1; y < 4; ++y)
            if (perm[x] > perm[y]) ++inv;
        const int sgn = (inv % 2 == 0) ? 1 : -1;
        put4(v[perm[0]], v[perm[1]], v[perm[2]], v[perm[3]], sgn * t4.sign);
      } while (std::next_permutation(perm, perm + 4));
    }
    return s;
  }();
  return t;
}

StructureTensors StructureTensors::with_phi_sign_flipped(int i, int j, int k) const {
  StructureTensors s = *this;
  const int v[3] = {i, j, k};
  const int perms[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}};
  for (const auto& p : perms) {
    const int a = v[p[0]], b = v[p[1]], c = v[p[2]];
    s.phi_[static_cast<std::size_t>(idx3(a, b, c))] =
        static_cast<std::int8_t>(-s.phi_[static_cast<std::size_t>(idx3(a, b, c))]);
  }
  return s;
}

namespace {

std::string witness(std::span<const int> idx) {
  std::string s = "(";
  char buf[8];
  for (std::size_t q = 0; q < idx.size(); ++q) {
    std::snprintf(buf, sizeof buf, "%d", idx[q]);
    s += buf;
    if (q + 1 < idx.size()) s += ",";
  }
  s += ")";
  return s;
}

}  // namespace

IdentityReport verify_contraction_identities(const StructureTensors& t) {
  IdentityReport rep;
  auto d = [](int a, int b) { return a == b ? 1 : 0; };

  // phi_ijp phi_abp = d_ia d_jb - d_ib d_ja - psi_ijab
  {
    long n = 0;
    long maxdev = 0;
    std::string w;
    for (int i = 1; i <= 7; ++i)
      for (int j = 1; j <= 7; ++j)
        for (int a = 1; a <= 7; ++a)
          for (int b = 1; b <= 7; ++b) {
            int lhs = 0;
            for (int p = 1; p <= 7; ++p) lhs += t.phi(i, j, p) * t.phi(a, b, p);
            const int rhs = d(i, a) * d(j, b) - d(i, b) * d(j, a) - t.psi(i, j, a, b);
            const long dev = std::abs(static_cast<long>(lhs - rhs));
            if (dev > maxdev) {
              maxdev = dev;
              const int idx[4] = {i, j, a, b};
              w = "witness " + witness(idx);
            }
            ++n;
          }
    rep.add(Check::make("phiphi", "phi_ijp phi_abp = d_ia d_jb - d_ib d_ja - psi_ijab",
                        static_cast<double>(maxdev), 0.0, n, maxdev > 0 ? w : ""));
  }

  // phi_ijp psi_abcp = d_ia phi_jbc + d_ib phi_ajc + d_ic phi_abj
  //                  - d_ja phi_ibc - d_jb phi_aic - d_jc phi_abi
  {
    long n = 0;
    long maxdev = 0;
    std::string w;
    for (int i = 1; i <= 7; ++i)
      for (int j = 1; j <= 7; ++j)
        for (int a = 1; a <= 7; ++a)
          for (int b = 1; b <= 7; ++b)
            for (int c = 1; c <= 7; ++c) {
              int lhs = 0;
              for (int p = 1; p <= 7; ++p) lhs += t.phi(i, j, p) * t.psi(a, b, c, p);
              const int rhs = d(i, a) * t.phi(j, b, c) + d(i, b) * t.phi(a, j, c) +
                              d(i, c) * t.phi(a, b, j) - d(j, a) * t.phi(i, b, c) -
                              d(j, b) * t.phi(a, i, c) - d(j, c) * t.phi(a, b, i);
              const long dev = std::abs(static_cast<long>(lhs - rhs));
              if (dev > maxdev) {
                maxdev = dev;
                const int idx[5] = {i, j, a, b, c};
                w = "witness " + witness(idx);
              }
              ++n;
            }
    rep.add(Check::make("phipsi1", "phi_ijp psi_abcp = delta/phi six-term expansion",
                        static_cast<double>(maxdev), 0.0, n, maxdev > 0 ? w : ""));
  }

  // phi_ipq psi_abpq = -4 phi_iab
  {
    long n = 0;
    long maxdev = 0;
    std::string w;
    for (int i = 1; i <= 7; ++i)
      for (int a = 1; a <= 7; ++a)
        for (int b = 1; b <= 7; ++b) {
          int lhs = 0;
          for (int p = 1; p <= 7; ++p)
            for (int q = 1; q <= 7; ++q) lhs += t.phi(i, p, q) * t.psi(a, b, p, q);
          const int rhs = -4 * t.phi(i, a, b);
          const long dev = std::abs(static_cast<long>(lhs - rhs));
          if (dev > maxdev) {
            maxdev = dev;
            const int idx[3] = {i, a, b};
            w = "witness " + witness(idx);
          }
          ++n;
        }
    rep.add(Check::make("phipsi2", "phi_ipq psi_abpq = -4 phi_iab", static_cast<double>(maxdev),
                        0.0, n, maxdev > 0 ? w : ""));
  }

  // psi_ijkp psi_abcp = - phi_ajk phi_ibc - phi_iak phi_jbc - phi_ija phi_kbc
  //   + d_ia d_jb d_kc + d_ib d_jc d_ka + d_ic d_ja d_kb
  //   - d_ia d_jc d_kb - d_ib d_ja d_kc - d_ic d_jb d_ka
  //   - d_ia psi_jkbc - d_ja psi_kibc - d_ka psi_ijbc + d_ab psi_ijkc - d_ac psi_ijkb
  {
    long n = 0;
    long maxdev = 0;
    std::string w;
    for (int i = 1; i <= 7; ++i)
      for (int j = 1; j <= 7; ++j)
        for (int k = 1; k <= 7; ++k)
          for (int a = 1; a <= 7; ++a)
            for (int b = 1; b <= 7; ++b)
              for (int c = 1; c <= 7; ++c) {
                int lhs = 0;
                for (int p = 1; p <= 7; ++p) lhs += t.psi(i, j, k, p) * t.psi(a, b, c, p);
                const int rhs = -t.phi(a, j, k) * t.phi(i, b, c) - t.phi(i, a, k) * t.phi(j, b, c) -
                                t.phi(i, j, a) * t.phi(k, b, c) + d(i, a) * d(j, b) * d(k, c) +
                                d(i, b) * d(j, c) * d(k, a) + d(i, c) * d(j, a) * d(k, b) -
                                d(i, a) * d(j, c) * d(k, b) - d(i, b) * d(j, a) * d(k, c) -
                                d(i, c) * d(j, b) * d(k, a) - d(i, a) * t.psi(j, k, b, c) -
                                d(j, a) * t.psi(k, i, b, c) - d(k, a) * t.psi(i, j, b, c) +
                                d(a, b) * t.psi(i, j, k, c) - d(a, c) * t.psi(i, j, k, b);
                const long dev = std::abs(static_cast<long>(lhs - rhs));
                if (dev > maxdev) {
                  maxdev = dev;
                  const int idx[6] = {i, j, k, a, b, c};
                  w = "witness " + witness(idx);
                }
                ++n;
              }
    rep.add(Check::make("psipsi1", "psi_ijkp psi_abcp = phi/delta/psi fourteen-term expansion",
                        static_cast<double>(maxdev), 0.0, n, maxdev > 0 ? w : ""));
  }

  // psi_ijpq psi_abpq = 4 d_ia d_jb - 4 d_ib d_ja - 2 psi_ijab
  {
    long n = 0;
    long maxdev = 0;
    std::string w;
    for (int i = 1; i <= 7; ++i)
      for (int j = 1; j <= 7; ++j)
        for (int a = 1; a <= 7; ++a)
          for (int b = 1; b <= 7; ++b) {
            int lhs = 0;
            for (int p = 1; p <= 7; ++p)
              for (int q = 1; q <= 7; ++q) lhs += t.psi(i, j, p, q) * t.psi(a, b, p, q);
            const int rhs = 4 * d(i, a) * d(j, b) - 4 * d(i, b) * d(j, a) - 2 * t.psi(i, j, a, b);
            const long dev = std::abs(static_cast<long>(lhs - rhs));
            if (dev > maxdev) {
              maxdev = dev;
              const int idx[4] = {i, j, a, b};
              w = "witness " + witness(idx);
            }
            ++n;
          }
    rep.add(Check::make("psipsi2", "psi_ijpq psi_abpq = 4 d_ia d_jb - 4 d_ib d_ja - 2 psi_ijab",
                        static_cast<double>(maxdev), 0.0, n, maxdev > 0 ? w : ""));
  }

  return rep;
}

IdentityReport verify_contraction_identities() {
  return verify_contraction_identities(StructureTensors::standard());
}

}  // namespace g2alg
