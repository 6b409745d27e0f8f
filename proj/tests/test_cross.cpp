#include <cmath>

#include "doctest.h"
#include "g2alg/cross.hpp"
#include "g2alg/forms.hpp"

using namespace g2alg;

TEST_CASE("cross product on basis vectors") {
  CHECK((cross(basis_vector(1), basis_vector(2)) - basis_vector(3)).norm() == 0.0);
  CHECK((cross(basis_vector(5), basis_vector(6)) + basis_vector(3)).norm() == 0.0);
  CHECK((cross(basis_vector(1), basis_vector(4)) - basis_vector(5)).norm() == 0.0);
  CHECK((cross(basis_vector(2), basis_vector(4)) - basis_vector(6)).norm() == 0.0);
  CHECK((cross(basis_vector(3), basis_vector(4)) - basis_vector(7)).norm() == 0.0);
  SplitMix64 rng(1);
  const Vec7 u = rng.gaussian_vec7();
  CHECK(cross(u, u).norm() == 0.0);
}

TEST_CASE("cross product agrees with the exhaustive index sum on integer vectors") {
  const auto& T = StructureTensors::standard();
  SplitMix64 rng(2);
  for (int t = 0; t < 50; ++t) {
    Vec7 u, v;
    for (int i = 0; i < 7; ++i) {
      u(i) = static_cast<double>(static_cast<int>(rng.next_u64() % 21) - 10);
      v(i) = static_cast<double>(static_cast<int>(rng.next_u64() % 21) - 10);
    }
    Vec7 want = Vec7::Zero();
    for (int p = 1; p <= 7; ++p)
      for (int q = 1; q <= 7; ++q)
        for (int k = 1; k <= 7; ++k) want(k - 1) += u(p - 1) * v(q - 1) * T.phi(p, q, k);
    CHECK((cross(u, v) - want).norm() == 0.0);  // exact: small integer arithmetic

    double want_phi = 0.0;
    const Vec7 w = rng.gaussian_vec7();
    for (int i = 1; i <= 7; ++i)
      for (int j = 1; j <= 7; ++j)
        for (int k = 1; k <= 7; ++k) want_phi += u(i - 1) * v(j - 1) * w(k - 1) * T.phi(i, j, k);
    CHECK(triple_phi(u, v, w) == doctest::Approx(want_phi).epsilon(1e-12));
  }
}

TEST_CASE("the table route and the interior-product route agree") {
  SplitMix64 rng(12);
  for (int t = 0; t < 50; ++t) {
    const Vec7 u = rng.gaussian_vec7();
    const Vec7 v = rng.gaussian_vec7();
    // (u x v)_k = (v _| u _| phi)_k: mind the operand order, v then u.
    const Form route = interior(v, interior(u, standard_phi()));
    Vec7 via_forms;
    for (int k = 1; k <= 7; ++k) via_forms(k - 1) = route.value({k});
    CHECK((cross(u, v) - via_forms).norm() < 1e-13 * u.norm() * v.norm());
  }
}

TEST_CASE("triple products") {
  CHECK(triple_phi(basis_vector(1), basis_vector(2), basis_vector(3)) == 1.0);
  SplitMix64 rng(3);
  const Vec7 u = rng.gaussian_vec7();
  const Vec7 v = rng.gaussian_vec7();
  CHECK(std::abs(triple_phi(u, v, v)) < 1e-13 * u.norm() * v.squaredNorm());

  CHECK((psi_vector(basis_vector(4), basis_vector(5), basis_vector(6)) - basis_vector(7)).norm() ==
        0.0);
  CHECK(psi_vector(u, u, v).norm() < 1e-13 * u.squaredNorm() * v.norm());

  // u x (v x w) + <u,v> w - <u,w> v - psi(u,v,w) = 0
  const Vec7 w = rng.gaussian_vec7();
  const Vec7 lhs = cross(u, cross(v, w)) + u.dot(v) * w - u.dot(w) * v - psi_vector(u, v, w);
  CHECK(lhs.norm() < 1e-12 * u.norm() * v.norm() * w.norm());
}

TEST_CASE("adapted frame completion") {
  const Frame std_frame = complete_g2_frame(basis_vector(1), basis_vector(2), basis_vector(4));
  for (int i = 0; i < 7; ++i) CHECK((std_frame.e[(size_t)i] - basis_vector(i + 1)).norm() == 0.0);
  CHECK(std_frame.g2_adapted);

  const Frame f = complete_g2_frame(basis_vector(2), basis_vector(3), basis_vector(4));
  CHECK((f.e[2] - basis_vector(1)).norm() == 0.0);  // e2 x e3 = e1
  CHECK(f.orthonormality_residual() < 1e-14);
  CHECK(f.adapted_relations_residual() < 1e-14);

  CHECK_THROWS_AS(complete_g2_frame(basis_vector(1), basis_vector(2), basis_vector(3)),
                  std::invalid_argument);
  CHECK_THROWS_AS(complete_g2_frame(basis_vector(1), basis_vector(1), basis_vector(4)),
                  std::invalid_argument);
  CHECK_THROWS_AS(complete_g2_frame(2.0 * basis_vector(1), basis_vector(2), basis_vector(4)),
                  std::invalid_argument);
}

TEST_CASE("adapted frames preserve the phi coefficients") {
  SplitMix64 rng(4);
  const Form phi = standard_phi();
  for (int t = 0; t < 25; ++t) {
    const AssociativePlane p = random_associative_plane(rng);
    Vec7 e4 = rng.gaussian_vec7();
    e4 -= e4.dot(p.u) * p.u;
    e4 -= e4.dot(p.v) * p.v;
    e4 -= e4.dot(p.w) * p.w;
    e4.normalize();
    const Frame f = complete_g2_frame(p.u, p.v, e4);
    CHECK(f.orthonormality_residual() < 1e-12);
    for (int i = 1; i <= 7; ++i)
      for (int j = i + 1; j <= 7; ++j)
        for (int k = j + 1; k <= 7; ++k) {
          const double val =
              triple_phi(f.e[(size_t)(i - 1)], f.e[(size_t)(j - 1)], f.e[(size_t)(k - 1)]);
          CHECK(std::abs(val - phi.value({i, j, k})) < 1e-12);
        }
  }
}

TEST_CASE("associative plane detection") {
  double res = 0.0;
  auto p1 = is_associative(basis_vector(1), basis_vector(2), basis_vector(3), &res);
  REQUIRE(p1.has_value());
  CHECK(res == 0.0);
  CHECK((p1->w - basis_vector(3)).norm() == 0.0);

  auto p2 = is_associative(-basis_vector(3), basis_vector(5), basis_vector(6));
  REQUIRE(p2.has_value());

  auto p3 = is_associative(basis_vector(1), basis_vector(2), basis_vector(4), &res);
  CHECK_FALSE(p3.has_value());
  // psi(e1, e2, e4) = -e7, so the residual is exactly 1.
  CHECK(res == doctest::Approx(1.0));
  CHECK((psi_vector(basis_vector(1), basis_vector(2), basis_vector(4)) + basis_vector(7)).norm() ==
        0.0);

  CHECK_THROWS_AS(is_associative(basis_vector(1), basis_vector(1), basis_vector(2)),
                  std::invalid_argument);
}

TEST_CASE("random associative planes are reproducible and valid") {
  SplitMix64 a(99), b(99);
  const AssociativePlane p = random_associative_plane(a);
  const AssociativePlane q = random_associative_plane(b);
  CHECK((p.u - q.u).norm() == 0.0);
  CHECK((p.v - q.v).norm() == 0.0);
  CHECK((p.w - q.w).norm() == 0.0);

  SplitMix64 rng(5);
  double worst = 0.0;
  for (int t = 0; t < 1000; ++t) {
    const AssociativePlane pl = random_associative_plane(rng);
    worst = std::max(worst, pl.psi_residual);
    worst = std::max(worst, std::abs(pl.u.norm() - 1.0));
    worst = std::max(worst, std::abs(pl.u.dot(pl.v)));
    worst = std::max(worst, (cross(pl.u, pl.v) - pl.w).norm());
  }
  CHECK(worst < 1e-10);
}

TEST_CASE("cross product norm and orthogonality properties") {
  SplitMix64 rng(6);
  for (int t = 0; t < 200; ++t) {
    const Vec7 u = rng.gaussian_vec7();
    const Vec7 v = rng.gaussian_vec7();
    const double n2 = u.squaredNorm() * v.squaredNorm();
    CHECK(std::abs(cross(u, v).squaredNorm() - (n2 - std::pow(u.dot(v), 2))) < 1e-10 * n2);
    CHECK(std::abs(cross(u, v).dot(u)) < 1e-10 * n2);
    const Vec7 w = rng.gaussian_vec7();
    CHECK((cross(u, cross(u, w)) + u.squaredNorm() * w - u.dot(w) * u).norm() <
          1e-10 * u.squaredNorm() * w.norm());
  }
}
