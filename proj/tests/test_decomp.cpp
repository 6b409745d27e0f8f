#include <cmath>

#include "doctest.h"
#include "g2alg/canonical.hpp"
#include "g2alg/decomp.hpp"
#include "g2alg/forms.hpp"

using namespace g2alg;

TEST_CASE("projection onto Lambda^2_7") {
  // pi_7(e1 ^ e2) = (1/3) e3 _| phi
  const Form2 p = project7(Form2::wedge(basis_vector(1), basis_vector(2)));
  CHECK((p - Form2::interior_phi(basis_vector(3) / 3.0)).norm() < 1e-15);

  SplitMix64 rng(21);
  const Vec7 u = rng.gaussian_vec7();
  const Form2 cu = Form2::interior_phi(u);
  CHECK((project7(cu) - cu).norm() < 1e-13 * cu.norm());
  CHECK(project14(cu).norm() < 1e-13 * cu.norm());

  // pi_7 annihilates Lambda^2_14.
  CHECK(project7(random_g2_element(rng)).norm() < 1e-13);
}

TEST_CASE("projection onto Lambda^2_14 and reconstruction") {
  // (u ^ v)_14 = (1/3)(2 u^v + Psi_uv) on the first basis pair
  const Form2 w12 = Form2::wedge(basis_vector(1), basis_vector(2));
  const Form2 expected = (1.0 / 3.0) * (2.0 * w12 + psi_pair(basis_vector(1), basis_vector(2)));
  CHECK((project14(w12) - expected).norm() < 1e-15);

  SplitMix64 rng(22);
  for (int t = 0; t < 200; ++t) {
    const Form2 x = Form2::from_matrix_unchecked(rng.gaussian_skew());
    const SplitForm2 s = split(x);
    CHECK((s.part7 + s.part14 - x).norm() < 1e-12 * x.norm());
    CHECK(std::abs(inner(s.part7, s.part14)) < 1e-10 * x.norm() * x.norm());
  }
}

TEST_CASE("membership criteria for Lambda^2_14") {
  SplitMix64 rng(23);
  for (int t = 0; t < 50; ++t) CHECK(is_in_g2(random_g2_element(rng)));

  CHECK_FALSE(is_in_g2(Form2::interior_phi(basis_vector(1))));

  // Canonical matrix with lambda = 2, mu = 1 is a member.
  const Form2 canon = Form2::from_matrix_unchecked(g2_canonical_matrix(2.0, 1.0));
  CHECK(is_in_g2(canon, 1e-12));
  const MembershipResiduals r = g2_membership_residuals(canon);
  CHECK(r.contraction == 0.0);
  CHECK(r.derivation == 0.0);
}

TEST_CASE("Psi_uv basics") {
  SplitMix64 rng(24);
  const Vec7 u = rng.gaussian_vec7();
  CHECK(psi_pair(u, u).norm() < 1e-14 * u.squaredNorm());

  CHECK(inner(psi_pair(basis_vector(1), basis_vector(2)),
              psi_pair(basis_vector(1), basis_vector(2))) == 4.0);

  for (int t = 0; t < 100; ++t) {
    const Vec7 a = rng.gaussian_vec7();
    const Vec7 b = rng.gaussian_vec7();
    const SplitForm2 s = split(Form2::wedge(a, b));
    CHECK((psi_pair(a, b) - (-2.0 * s.part7 + s.part14)).norm() < 1e-12 * a.norm() * b.norm());
  }
}

TEST_CASE("Psi_uv agrees with the exterior-algebra route *(u ^ v ^ phi)") {
  SplitMix64 rng(25);
  for (int t = 0; t < 25; ++t) {
    const Vec7 u = rng.gaussian_vec7();
    const Vec7 v = rng.gaussian_vec7();
    const Form route =
        hodge_star(wedge(wedge(one_form(u), one_form(v)), standard_phi()));
    CHECK((to_form2(route) - psi_pair(u, v)).norm() < 1e-12 * u.norm() * v.norm());
  }
}

TEST_CASE("the linear map Psi equals -2 pi_7 + pi_14") {
  SplitMix64 rng(26);
  for (int t = 0; t < 100; ++t) {
    const Form2 x = Form2::from_matrix_unchecked(rng.gaussian_skew());
    const SplitForm2 s = split(x);
    CHECK((psi_map(x) - (-2.0 * s.part7 + s.part14)).norm() < 1e-12 * x.norm());
  }
}

TEST_CASE("bracket conventions") {
  SplitMix64 rng(27);
  const Form2 x = random_g2_element(rng);
  CHECK(bracket(x, x).norm() == 0.0);

  for (int t = 0; t < 100; ++t) {
    const Form2 z = random_g2_element(rng);
    const Vec7 u = rng.gaussian_vec7();
    CHECK((bracket(z, Form2::interior_phi(u)) - Form2::interior_phi(z.apply(u))).norm() <
          1e-12 * z.norm() * u.norm());

    const Vec7 v = rng.gaussian_vec7();
    const Form2 lhs = bracket(Form2::interior_phi(u), Form2::interior_phi(v));
    const Form2 rhs = -1.0 * Form2::wedge(u, v) - 2.0 * psi_pair(u, v);
    CHECK((lhs - rhs).norm() < 1e-12 * u.norm() * v.norm());
  }
}

TEST_CASE("identity suite passes on 1000 random trials") {
  const IdentityReport rep = verify_psi_identities(1000, 1234);
  for (const auto& c : rep.checks) {
    INFO(c.name, " residual=", c.residual);
    CHECK(c.pass);
  }
  const IdentityReport rep2 = verify_bracket_identities(1000, 4321);
  for (const auto& c : rep2.checks) {
    INFO(c.name, " residual=", c.residual);
    CHECK(c.pass);
  }
  CHECK_THROWS_AS(verify_psi_identities(0, 1), std::invalid_argument);
}

TEST_CASE("worked instance of the cross-cross identity on basis vectors") {
  // u, v, w = e1, e2, e4: (e1 x e4) x (e2 x e4) = e5 x e6 = -e3,
  // and 2 phi(e1,e2,e4) e4 - |e4|^2 e1 x e2 = -e3 as well.
  const Vec7 lhs = cross(cross(basis_vector(1), basis_vector(4)),
                         cross(basis_vector(2), basis_vector(4)));
  CHECK((lhs + basis_vector(3)).norm() == 0.0);
  const double ph = triple_phi(basis_vector(1), basis_vector(2), basis_vector(4));
  CHECK(ph == 0.0);
  const Vec7 rhs = 2.0 * ph * basis_vector(4) - cross(basis_vector(1), basis_vector(2));
  CHECK((lhs - rhs).norm() == 0.0);
}

TEST_CASE("the Psi commutator identity degenerates to 0 = 0 when w = 0") {
  SplitMix64 rng(28);
  const Vec7 u = rng.gaussian_vec7();
  const Vec7 v = rng.gaussian_vec7();
  const Vec7 w = Vec7::Zero();
  CHECK(bracket(psi_pair(u, w), psi_pair(v, w)).norm() == 0.0);
  CHECK(((-1.0) * (w.squaredNorm() * psi_pair(u, v)) -
         psi_pair(cross(u, w), cross(v, w)))
            .norm() == 0.0);
}
