#include <cmath>

#include "doctest.h"
#include "g2alg/forms.hpp"
#include "g2alg/rng.hpp"

using namespace g2alg;

TEST_CASE("standard phi has the seven displayed coefficients") {
  const Form phi = standard_phi();
  CHECK(phi.value({1, 2, 3}) == 1.0);
  CHECK(phi.value({1, 6, 7}) == -1.0);
  CHECK(phi.value({5, 2, 7}) == -1.0);
  CHECK(phi.value({5, 6, 3}) == -1.0);
  CHECK(phi.value({4, 1, 5}) == -1.0);
  CHECK(phi.value({4, 2, 6}) == -1.0);
  CHECK(phi.value({4, 3, 7}) == -1.0);
  CHECK(phi.value({4, 3, 7}) == -1.0);
  CHECK(phi.value({4, 3, 7}) == phi.value({3, 7, 4}));  // cyclic
  CHECK(phi.value({1, 1, 5}) == 0.0);                   // repeated index

  int nonzero = 0;
  for (int s = 0; s < phi.coefficient_count(); ++s)
    if (phi.raw(s) != 0.0) {
      ++nonzero;
      CHECK(std::abs(phi.raw(s)) == 1.0);
    }
  CHECK(nonzero == 7);
}

TEST_CASE("standard psi matches the displayed coefficients and equals *phi") {
  const Form psi = standard_psi();
  CHECK(psi.value({4, 5, 6, 7}) == 1.0);
  CHECK(psi.value({4, 5, 2, 3}) == -1.0);
  CHECK(psi.value({4, 1, 6, 3}) == -1.0);
  CHECK(psi.value({4, 1, 2, 7}) == -1.0);
  CHECK(psi.value({2, 6, 3, 7}) == -1.0);
  CHECK(psi.value({1, 5, 3, 7}) == -1.0);
  CHECK(psi.value({1, 5, 2, 6}) == -1.0);
  CHECK(psi.value({1, 5, 2, 6}) == -psi.value({5, 1, 2, 6}));

  // Independent route: expand *phi by the complementary-index sign rule.
  const Form starred = hodge_star(standard_phi());
  CHECK((starred - psi).max_abs() == 0.0);
  CHECK(starred.value({1, 2, 3, 4}) == 0.0);

  int nonzero = 0;
  for (int s = 0; s < psi.coefficient_count(); ++s)
    if (psi.raw(s) != 0.0) ++nonzero;
  CHECK(nonzero == 7);
}

TEST_CASE("hodge star basics") {
  Form e123(3);
  e123.set({1, 2, 3}, 1.0);
  const Form s = hodge_star(e123);
  CHECK(s.value({4, 5, 6, 7}) == 1.0);
  for (int slot = 0; slot < s.coefficient_count(); ++slot)
    if (s.slot_indices(slot) != std::vector<int>{4, 5, 6, 7}) CHECK(s.raw(slot) == 0.0);

  // ** = id on every basis 2-form (and 0-,1-,3-forms for good measure).
  for (int k : {0, 1, 2, 3}) {
    Form b(k);
    if (k == 0)
      b.raw(0) = 1.0;
    else
      b.raw(k) = 1.0;
    CHECK((hodge_star(hodge_star(b)) - b).max_abs() == 0.0);
  }
  for (int i = 1; i <= 7; ++i)
    for (int j = i + 1; j <= 7; ++j) {
      Form b(2);
      b.set({i, j}, 1.0);
      CHECK((hodge_star(hodge_star(b)) - b).max_abs() == 0.0);
    }
  CHECK_THROWS(Form(8));
}

TEST_CASE("wedge product conventions") {
  const Form e1 = one_form(basis_vector(1));
  const Form e2 = one_form(basis_vector(2));
  const Form w = wedge(e1, e2);
  CHECK(w.value({1, 2}) == 1.0);
  CHECK(wedge(e1, e1).max_abs() == 0.0);
  CHECK_THROWS(wedge(standard_psi(), standard_psi()));

  // (e1 ^ e2) ^ phi is a 5-form whose Hodge star has components
  // psi_{12ij}; cross-check slot by slot.
  const Form five = wedge(w, standard_phi());
  const Form star5 = hodge_star(five);
  const Form psi = standard_psi();
  for (int i = 1; i <= 7; ++i)
    for (int j = i + 1; j <= 7; ++j) CHECK(star5.value({i, j}) == psi.value({1, 2, i, j}));
}

TEST_CASE("interior product conventions") {
  const Form phi = standard_phi();
  // e2 _| e1 _| phi is the 1-form e3: the cross product e1 x e2.
  const Form f = interior(basis_vector(2), interior(basis_vector(1), phi));
  for (int k = 1; k <= 7; ++k) CHECK(f.value({k}) == (k == 3 ? 1.0 : 0.0));

  const Form g = interior(basis_vector(6), interior(basis_vector(5), phi));
  for (int k = 1; k <= 7; ++k) CHECK(g.value({k}) == (k == 3 ? -1.0 : 0.0));

  SplitMix64 rng(7);
  const Vec7 v = rng.gaussian_vec7();
  CHECK(interior(v, interior(v, phi)).max_abs() < 1e-14);
  CHECK_THROWS(interior(v, Form(0)));
}

TEST_CASE("antisymmetry round trip on random permuted tuples") {
  SplitMix64 rng(11);
  const Form phi = standard_phi();
  const Form psi = standard_psi();
  for (int t = 0; t < 100; ++t) {
    int idx3[3];
    for (int& v : idx3) v = 1 + static_cast<int>(rng.next_u64() % 7);
    // sign of the permutation that sorts idx3, or 0 with repeats
    int sorted[3] = {idx3[0], idx3[1], idx3[2]};
    int sign = 1;
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) {
        if (sorted[i] == sorted[j]) sign = 0;
        if (sorted[i] > sorted[j]) {
          std::swap(sorted[i], sorted[j]);
          sign = -sign;
        }
      }
    const double lhs = phi.value({idx3[0], idx3[1], idx3[2]});
    const double rhs = sign == 0 ? 0.0 : sign * phi.value({sorted[0], sorted[1], sorted[2]});
    CHECK(lhs == rhs);
  }
  for (int t = 0; t < 100; ++t) {
    int idx4[4];
    for (int& v : idx4) v = 1 + static_cast<int>(rng.next_u64() % 7);
    int sorted[4] = {idx4[0], idx4[1], idx4[2], idx4[3]};
    int sign = 1;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) {
        if (sorted[i] == sorted[j]) sign = 0;
        if (sorted[i] > sorted[j]) {
          std::swap(sorted[i], sorted[j]);
          sign = -sign;
        }
      }
    const double lhs = psi.value({idx4[0], idx4[1], idx4[2], idx4[3]});
    const double rhs =
        sign == 0 ? 0.0 : sign * psi.value({sorted[0], sorted[1], sorted[2], sorted[3]});
    CHECK(lhs == rhs);
  }
}

TEST_CASE("exact contraction identities") {
  const IdentityReport rep = verify_contraction_identities();
  REQUIRE(rep.checks.size() == 5);
  for (const auto& c : rep.checks) {
    CHECK(c.pass);
    CHECK(c.residual == 0.0);
  }
  CHECK(rep.checks[0].count == 2401);
  CHECK(rep.checks[1].count == 16807);
  CHECK(rep.checks[2].count == 343);
  CHECK(rep.checks[3].count == 117649);
  CHECK(rep.checks[4].count == 2401);
}

TEST_CASE("a corrupted phi fails with a witness tuple") {
  const StructureTensors bad = StructureTensors::standard().with_phi_sign_flipped(1, 2, 3);
  const IdentityReport rep = verify_contraction_identities(bad);
  CHECK_FALSE(rep.all_pass());
  bool witness_seen = false;
  for (const auto& c : rep.checks)
    if (!c.pass && !c.detail.empty()) witness_seen = true;
  CHECK(witness_seen);
}
