#include "g2alg/decomp.hpp"

#include <cmath>
#include <stdexcept>

#include "g2alg/cross.hpp"
#include "g2alg/forms.hpp"

namespace g2alg {

Vec7 project7_vector(const Form2& x) {
  const auto& T = StructureTensors::standard();
  Vec7 u = Vec7::Zero();
  for (int p = 1; p <= 7; ++p) {
    double acc = 0.0;
    for (int i = 1; i <= 7; ++i)
      for (int j = 1; j <= 7; ++j) {
        const int c = T.phi(i, j, p);
        if (c != 0) acc += x(i, j) * c;
      }
    u(p - 1) = acc / 6.0;
  }
  return u;
}

Form2 project7(const Form2& x) { return Form2::interior_phi(project7_vector(x)); }

Form2 project14(const Form2& x) { return x - project7(x); }

SplitForm2 split(const Form2& x) {
  SplitForm2 s;
  s.part7 = project7(x);
  s.part14 = x - s.part7;
  return s;
}

Form2 raw_psi_contraction(const Form2& x) {
  const auto& T = StructureTensors::standard();
  Mat7 m = Mat7::Zero();
  for (int i = 1; i <= 7; ++i)
    for (int j = i + 1; j <= 7; ++j) {
      double acc = 0.0;
      for (int p = 1; p <= 7; ++p)
        for (int q = 1; q <= 7; ++q) {
          const int c = T.psi(i, j, p, q);
          if (c != 0) acc += c * x(p, q);
        }
      m(i - 1, j - 1) = acc;
      m(j - 1, i - 1) = -acc;
    }
  return Form2::from_matrix_unchecked(m);
}

Form2 psi_map(const Form2& x) { return 0.5 * raw_psi_contraction(x); }

Form2 psi_pair(const Vec7& u, const Vec7& v) {
  const auto& T = StructureTensors::standard();
  Mat7 m = Mat7::Zero();
  for (int i = 1; i <= 7; ++i)
    for (int j = i + 1; j <= 7; ++j) {
      double acc = 0.0;
      for (int p = 1; p <= 7; ++p)
        for (int q = 1; q <= 7; ++q) {
          const int c = T.psi(p, q, i, j);
          if (c != 0) acc += u(p - 1) * v(q - 1) * c;
        }
      m(i - 1, j - 1) = acc;
      m(j - 1, i - 1) = -acc;
    }
  return Form2::from_matrix_unchecked(m);
}

MembershipResiduals g2_membership_residuals(const Form2& x) {
  const auto& T = StructureTensors::standard();
  MembershipResiduals r{0.0, 0.0};
  for (int k = 1; k <= 7; ++k) {
    double acc = 0.0;
    for (int p = 1; p <= 7; ++p)
      for (int q = 1; q <= 7; ++q) {
        const int c = T.phi(p, q, k);
        if (c != 0) acc += x(p, q) * c;
      }
    r.contraction = std::max(r.contraction, std::abs(acc));
  }
  for (int i = 1; i <= 7; ++i)
    for (int j = 1; j <= 7; ++j)
      for (int k = 1; k <= 7; ++k) {
        double acc = 0.0;
        for (int p = 1; p <= 7; ++p)
          acc += x(i, p) * T.phi(p, j, k) + x(j, p) * T.phi(i, p, k) + x(k, p) * T.phi(i, j, p);
        r.derivation = std::max(r.derivation, std::abs(acc));
      }
  return r;
}

bool is_in_g2(const Form2& x, double tolerance) {
  const MembershipResiduals r = g2_membership_residuals(x);
  const bool pass_c = r.contraction <= tolerance;
  const bool pass_d = r.derivation <= tolerance;
  if (pass_c != pass_d) {
    // The two criteria are algebraically equivalent; a split verdict with a
    // wide margin means the implementation is broken, not the input.
    const double hi = std::max(r.contraction, r.derivation);
    const double lo = std::min(r.contraction, r.derivation);
    if (hi > 100.0 * std::max(lo, tolerance))
      throw std::runtime_error("membership criteria disagree beyond the tolerance band");
  }
  return pass_c && pass_d;
}

Form2 random_g2_element(SplitMix64& rng) {
  return project14(Form2::from_matrix_unchecked(rng.gaussian_skew()));
}

namespace {

// Three mutually orthogonal Gaussians, deliberately left unnormalized.
void orthogonal_triple(SplitMix64& rng, Vec7& u, Vec7& v, Vec7& w) {
  while (true) {
    u = rng.gaussian_vec7();
    v = rng.gaussian_vec7();
    w = rng.gaussian_vec7();
    if (u.norm() < 1e-3) continue;
    v -= u.dot(v) / u.squaredNorm() * u;
    if (v.norm() < 1e-3) continue;
    w -= u.dot(w) / u.squaredNorm() * u;
    w -= v.dot(w) / v.squaredNorm() * v;
    if (w.norm() < 1e-3) continue;
    return;
  }
}

struct MaxTracker {
  double value = 0.0;
  void update(double num, double den) { value = std::max(value, num / std::max(den, 1e-300)); }
};

}  // namespace

IdentityReport verify_psi_identities(int trials, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  SplitMix64 rng(seed);

  MaxTracker id1, id2, id3, main_id, psi_id, psi_uv, ip_a, ip_b, deriv_id;

  for (int t = 0; t < trials; ++t) {
    Vec7 u, v, w;
    orthogonal_triple(rng, u, v, w);
    const double w2 = w.squaredNorm();
    const double scale = u.norm() * v.norm() * w2;
    const double ph = triple_phi(u, v, w);
    const Vec7 ps = psi_vector(u, v, w);

    // (u x w) x (v x w) = 2 phi(u,v,w) w - |w|^2 u x v
    {
      const Vec7 lhs = cross(cross(u, w), cross(v, w));
      const Vec7 rhs = 2.0 * ph * w - w2 * cross(u, v);
      id1.update((lhs - rhs).norm(), scale);
    }
    // Psi_{(uxw)(vxw)} = psi(u,v,w) ^ w + |w|^2 u ^ v - phi(u,v,w) w _| phi
    {
      const Form2 lhs = psi_pair(cross(u, w), cross(v, w));
      const Form2 rhs =
          Form2::wedge(ps, w) + w2 * Form2::wedge(u, v) - ph * Form2::interior_phi(w);
      id2.update((lhs - rhs).norm(), scale);
    }
    // (u x w) ^ (v x w) = phi(u,v,w) w _| phi + psi(u,v,w) ^ w + |w|^2 Psi_uv
    {
      const Form2 lhs = Form2::wedge(cross(u, w), cross(v, w));
      const Form2 rhs =
          ph * Form2::interior_phi(w) + Form2::wedge(ps, w) + w2 * psi_pair(u, v);
      id3.update((lhs - rhs).norm(), scale);
    }
    // [Psi_uw, Psi_vw] = -|w|^2 Psi_uv - Psi_{(uxw)(vxw)}
    {
      const Form2 lhs = bracket(psi_pair(u, w), psi_pair(v, w));
      const Form2 rhs = -1.0 * (w2 * psi_pair(u, v)) - psi_pair(cross(u, w), cross(v, w));
      main_id.update((lhs - rhs).norm(), scale);
    }
    // u ^ v = (u x v) _| phi + Psi_uv
    {
      const Form2 lhs = Form2::wedge(u, v);
      const Form2 rhs = Form2::interior_phi(cross(u, v)) + psi_pair(u, v);
      psi_id.update((lhs - rhs).norm(), u.norm() * v.norm());
    }
    // Psi_uv = -2 (u ^ v)_7 + (u ^ v)_14
    {
      const SplitForm2 s = split(Form2::wedge(u, v));
      psi_uv.update((psi_pair(u, v) - (-2.0 * s.part7 + s.part14)).norm(), u.norm() * v.norm());
    }
    // inner product formulas on a fresh unconstrained quadruple
    {
      const Vec7 a = rng.gaussian_vec7(), b = rng.gaussian_vec7(), c = rng.gaussian_vec7(),
                 d = rng.gaussian_vec7();
      const double sc = a.norm() * b.norm() * c.norm() * d.norm();
      const double psi_abcd = psi_vector(a, b, c).dot(d);
      const double lhs1 = inner(psi_pair(a, b), psi_pair(c, d));
      const double rhs1 = 4.0 * (a.dot(c) * b.dot(d) - a.dot(d) * b.dot(c)) - 2.0 * psi_abcd;
      ip_a.update(std::abs(lhs1 - rhs1), sc);
      const double lhs2 = inner(psi_pair(a, b), Form2::wedge(c, d));
      ip_b.update(std::abs(lhs2 - 2.0 * psi_abcd), sc);
    }
    // X(u x y, v x y) = |y|^2 X(u,v) + X(y, (u x v) x y) for X in g2
    {
      const Form2 X = random_g2_element(rng);
      auto val = [&X](const Vec7& p, const Vec7& q) { return p.dot(X.apply(q)); };
      const double lhs = val(cross(u, w), cross(v, w));
      const double rhs = w2 * val(u, v) + val(w, cross(cross(u, v), w));
      deriv_id.update(std::abs(lhs - rhs), X.norm() * scale);
    }
  }

  IdentityReport rep;
  const double tol_rel = 1e-9;
  rep.add(Check::make("cross-cross", "(u x w) x (v x w) = 2 phi(u,v,w) w - |w|^2 u x v", id1.value,
                      tol_rel, trials));
  rep.add(Check::make("psi-cross-pair",
                      "Psi_{(uxw)(vxw)} = psi(u,v,w)^w + |w|^2 u^v - phi(u,v,w) w_|phi", id2.value,
                      tol_rel, trials));
  rep.add(Check::make("wedge-cross-pair",
                      "(uxw)^(vxw) = phi(u,v,w) w_|phi + psi(u,v,w)^w + |w|^2 Psi_uv", id3.value,
                      tol_rel, trials));
  rep.add(Check::make("psi-commutator", "[Psi_uw, Psi_vw] = -|w|^2 Psi_uv - Psi_{(uxw)(vxw)}",
                      main_id.value, tol_rel, trials));
  rep.add(Check::make("wedge-split", "u^v = (u x v)_|phi + Psi_uv", psi_id.value, tol_rel, trials));
  rep.add(Check::make("psi-projections", "Psi_uv = -2 (u^v)_7 + (u^v)_14", psi_uv.value, tol_rel,
                      trials));
  rep.add(Check::make("psi-inner", "<Psi_uv, Psi_wy> = 4 det<.,.> - 2 psi(u,v,w,y)", ip_a.value,
                      tol_rel, trials));
  rep.add(Check::make("psi-inner-wedge", "<Psi_uv, w^y> = 2 psi(u,v,w,y)", ip_b.value, tol_rel,
                      trials));
  rep.add(Check::make("derivation-cross",
                      "X(uxy, vxy) = |y|^2 X(u,v) + X(y,(uxv)xy) for X in Lambda^2_14",
                      deriv_id.value, tol_rel, trials));
  return rep;
}

IdentityReport verify_bracket_identities(int trials, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  SplitMix64 rng(seed);

  MaxTracker act, line1, line2, line3, pi7_77, closed, mixed_floor;
  mixed_floor.value = 1e300;

  for (int t = 0; t < trials; ++t) {
    const Vec7 u = rng.gaussian_vec7();
    const Vec7 v = rng.gaussian_vec7();
    const double uv = u.norm() * v.norm();
    const Form2 cu = Form2::interior_phi(u);
    const Form2 cv = Form2::interior_phi(v);
    const Form2 x = random_g2_element(rng);

    act.update((bracket(x, cu) - Form2::interior_phi(x.apply(u))).norm(), x.norm() * u.norm());

    const Form2 br77 = bracket(cu, cv);
    const Form2 w = Form2::wedge(u, v);
    const Form2 psi_uv = psi_pair(u, v);
    line1.update((br77 - (-1.0 * w - 2.0 * psi_uv)).norm(), uv);
    const SplitForm2 s = split(br77);
    line2.update((s.part7 - (w - psi_uv)).norm(), uv);
    line3.update((s.part14 - (-2.0 * w - psi_uv)).norm(), uv);
    pi7_77.update((s.part7 - Form2::interior_phi(cross(u, v))).norm(), uv);

    const Form2 y = random_g2_element(rng);
    const Form2 bxy = bracket(x, y);
    const MembershipResiduals r = g2_membership_residuals(bxy);
    closed.update(std::max(r.contraction, r.derivation), std::max(bxy.norm(), 1e-12));

    // Mixed type needs genuinely independent u, v: use orthonormalized pairs.
    const std::vector<Vec7> on = orthonormalize(std::array<Vec7, 2>{u, v});
    const SplitForm2 sm = split(bracket(Form2::interior_phi(on[0]), Form2::interior_phi(on[1])));
    mixed_floor.value = std::min({mixed_floor.value, sm.part7.norm(), sm.part14.norm()});
  }

  IdentityReport rep;
  const double tol_rel = 1e-9;
  rep.add(Check::make("bracket-14-7", "[X, u_|phi] = X(u)_|phi for X in Lambda^2_14", act.value,
                      tol_rel, trials));
  rep.add(Check::make("bracket-77", "[u_|phi, v_|phi] = -(u^v) - 2 Psi_uv", line1.value, tol_rel,
                      trials));
  rep.add(Check::make("bracket-77-pi7", "pi_7 of [u_|phi, v_|phi] = u^v - Psi_uv", line2.value,
                      tol_rel, trials));
  rep.add(Check::make("bracket-77-pi14", "pi_14 of [u_|phi, v_|phi] = -2 u^v - Psi_uv",
                      line3.value, tol_rel, trials));
  rep.add(Check::make("bracket-77-cross", "pi_7 of [u_|phi, v_|phi] = (u x v)_|phi", pi7_77.value,
                      tol_rel, trials));
  rep.add(Check::make("g2-closed", "Lambda^2_14 is closed under the bracket", closed.value,
                      tol_rel, trials));
  rep.add(Check::make_flag("bracket-77-mixed",
                           "[u_|phi, v_|phi] has nonzero parts of both types for independent u, v",
                           mixed_floor.value > 1e-6, mixed_floor.value, 1e-6, trials));
  return rep;
}

}  // namespace g2alg
