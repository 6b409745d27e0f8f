#include "g2alg/cross.hpp"

#include <cmath>
#include <stdexcept>

#include "g2alg/forms.hpp"

namespace g2alg {

namespace {

// The seven oriented triples (i, j, k) with phi_ijk = +1, i.e. e_i x e_j = e_k.
// Derived from phi = e123 - e167 - e527 - e563 - e415 - e426 - e437.
struct CrossLine {
  int i, j, k;
};
constexpr CrossLine kLines[7] = {{1, 2, 3}, {1, 7, 6}, {5, 7, 2}, {5, 3, 6},
                                 {4, 5, 1}, {4, 6, 2}, {4, 7, 3}};

}  // namespace

Vec7 cross(const Vec7& u, const Vec7& v) {
  Vec7 r = Vec7::Zero();
  for (const auto& L : kLines) {
    const int a = L.i - 1, b = L.j - 1, c = L.k - 1;
    const double t = u(a) * v(b) - u(b) * v(a);
    // e_a x e_b = e_c together with the two cyclic rotations.
    r(c) += t;
    r(a) += u(b) * v(c) - u(c) * v(b);
    r(b) += u(c) * v(a) - u(a) * v(c);
  }
  return r;
}

double triple_phi(const Vec7& u, const Vec7& v, const Vec7& w) { return cross(u, v).dot(w); }

Vec7 psi_vector(const Vec7& u, const Vec7& v, const Vec7& w) {
  const auto& T = StructureTensors::standard();
  Vec7 r = Vec7::Zero();
  for (int l = 1; l <= 7; ++l) {
    double acc = 0.0;
    for (int i = 1; i <= 7; ++i)
      for (int j = 1; j <= 7; ++j)
        for (int k = 1; k <= 7; ++k) {
          const int c = T.psi(i, j, k, l);
          if (c != 0) acc += u(i - 1) * v(j - 1) * w(k - 1) * c;
        }
    r(l - 1) = acc;
  }
  return r;
}

Frame Frame::standard() {
  Frame f;
  for (int i = 0; i < 7; ++i) f.e[static_cast<std::size_t>(i)] = basis_vector(i + 1);
  f.g2_adapted = true;
  return f;
}

Mat7 Frame::as_matrix() const {
  Mat7 m;
  for (int i = 0; i < 7; ++i) m.col(i) = e[static_cast<std::size_t>(i)];
  return m;
}

double Frame::orthonormality_residual() const {
  const Mat7 f = as_matrix();
  return (f.transpose() * f - Mat7::Identity()).norm();
}

double Frame::adapted_relations_residual() const {
  double r = 0.0;
  r = std::max(r, (cross(e[0], e[1]) - e[2]).norm());
  r = std::max(r, (cross(e[0], e[3]) - e[4]).norm());
  r = std::max(r, (cross(e[1], e[3]) - e[5]).norm());
  r = std::max(r, (cross(e[2], e[3]) - e[6]).norm());
  return r;
}

Frame complete_g2_frame(const Vec7& e1, const Vec7& e2, const Vec7& e4) {
  const double eps = tol::kOrth;
  auto check_unit = [eps](const Vec7& v, const char* what) {
    if (std::abs(v.norm() - 1.0) > eps)
      throw std::invalid_argument(std::string(what) + " is not a unit vector");
  };
  check_unit(e1, "e1");
  check_unit(e2, "e2");
  check_unit(e4, "e4");
  if (std::abs(e1.dot(e2)) > eps || std::abs(e1.dot(e4)) > eps || std::abs(e2.dot(e4)) > eps)
    throw std::invalid_argument("inputs are not pairwise orthogonal");
  const Vec7 e3 = cross(e1, e2);
  if (std::abs(e3.dot(e4)) > eps)
    throw std::invalid_argument("e4 lies in the associative span of e1, e2");

  Frame f;
  f.e[0] = e1;
  f.e[1] = e2;
  f.e[2] = e3;
  f.e[3] = e4;
  f.e[4] = cross(e1, e4);
  f.e[5] = cross(e2, e4);
  f.e[6] = cross(e3, e4);
  f.g2_adapted = true;
  return f;
}

Eigen::Matrix<double, 7, 3> AssociativePlane::basis_matrix() const {
  Eigen::Matrix<double, 7, 3> m;
  m.col(0) = u;
  m.col(1) = v;
  m.col(2) = w;
  return m;
}

std::optional<AssociativePlane> is_associative(const Vec7& a, const Vec7& b, const Vec7& c,
                                               double* psi_residual_out) {
  const std::vector<Vec7> on = orthonormalize(std::array<Vec7, 3>{a, b, c});
  const Vec7 &u = on[0], &v = on[1], &w = on[2];

  const double psi_res = psi_vector(u, v, w).norm();
  if (psi_residual_out) *psi_residual_out = psi_res;

  // Closure: u x v must lie in span{u, v, w}; for orthonormal u, v it can
  // only be +/- w plus a residual.
  const Vec7 uv = cross(u, v);
  const Vec7 rem = uv - uv.dot(u) * u - uv.dot(v) * v - uv.dot(w) * w;
  const double closure_res = rem.norm();

  if (psi_res > tol::kAssoc || closure_res > tol::kAssoc) return std::nullopt;

  AssociativePlane p;
  p.u = u;
  p.v = v;
  p.w = uv;
  p.psi_residual = psi_res;
  return p;
}

AssociativePlane random_associative_plane(SplitMix64& rng) {
  while (true) {
    const Vec7 a = rng.gaussian_vec7();
    const Vec7 b = rng.gaussian_vec7();
    if (a.norm() < 1e-6) continue;
    const Vec7 u = a.normalized();
    Vec7 v = b - b.dot(u) * u;
    if (v.norm() < 1e-6) continue;
    v.normalize();
    AssociativePlane p;
    p.u = u;
    p.v = v;
    p.w = cross(u, v);
    p.psi_residual = psi_vector(p.u, p.v, p.w).norm();
    return p;
  }
}

std::array<Vec7, 3> random_generic_plane(SplitMix64& rng, double min_psi_residual) {
  while (true) {
    const std::vector<Vec7> on =
        orthonormalize(std::array<Vec7, 3>{rng.gaussian_vec7(), rng.gaussian_vec7(), rng.gaussian_vec7()});
    if (psi_vector(on[0], on[1], on[2]).norm() >= min_psi_residual) return {on[0], on[1], on[2]};
  }
}

std::vector<Vec7> orthonormalize(std::span<const Vec7> vs) {
  std::vector<Vec7> out;
  out.reserve(vs.size());
  for (const Vec7& x : vs) {
    Vec7 y = x;
    for (int pass = 0; pass < 2; ++pass)
      for (const Vec7& o : out) y -= o.dot(y) * o;
    const double n = y.norm();
    if (n < 1e-12 * std::max(1.0, x.norm()))
      throw std::invalid_argument("rank-deficient input span");
    out.push_back(y / n);
  }
  return out;
}

std::vector<Vec7> orthogonal_complement(std::span<const Vec7> vs) {
  std::vector<Vec7> out;
  const std::size_t want = 7 - vs.size();
  for (int k = 1; k <= 7 && out.size() < want; ++k) {
    Vec7 y = basis_vector(k);
    for (int pass = 0; pass < 2; ++pass) {
      for (const Vec7& o : vs) y -= o.dot(y) * o;
      for (const Vec7& o : out) y -= o.dot(y) * o;
    }
    const double n = y.norm();
    if (n > 1e-8) out.push_back(y / n);
  }
  if (out.size() != want) throw std::runtime_error("complement construction failed");
  return out;
}

}  // namespace g2alg
