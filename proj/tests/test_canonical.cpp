#include <cmath>
#include <vector>

#include "doctest.h"
#include "g2alg/canonical.hpp"
#include "g2alg/linalg.hpp"

using namespace g2alg;

namespace {

// Characteristic polynomial coefficients by the Faddeev-LeVerrier
// recursion: det(tI - A) = t^n - c1 t^{n-1} - c2 t^{n-2} - ... - cn.
// Independent of any eigensolver, so it can referee the spectral claims.
std::vector<double> char_poly(const Eigen::MatrixXd& a) {
  const int n = static_cast<int>(a.rows());
  std::vector<double> c(static_cast<std::size_t>(n) + 1, 0.0);
  c[0] = 1.0;  // leading coefficient of t^n
  Eigen::MatrixXd m = Eigen::MatrixXd::Identity(n, n);
  for (int k = 1; k <= n; ++k) {
    m = a * m;
    const double ck = m.trace() / k;
    c[static_cast<std::size_t>(k)] = -ck;
    m -= ck * Eigen::MatrixXd::Identity(n, n);
  }
  return c;
}

// Coefficients of t (t^2 + l^2)(t^2 + n^2)(t^2 + m^2), highest power first.
std::vector<double> skew_spectrum_poly(double l, double n, double m) {
  std::vector<double> p = {1.0};  // polynomial in t^2 first
  for (double s : {l, n, m}) {
    std::vector<double> q(p.size() + 1, 0.0);
    for (std::size_t i = 0; i < p.size(); ++i) {
      q[i] += p[i];
      q[i + 1] += p[i] * s * s;
    }
    p = std::move(q);
  }
  // interleave zeros for odd powers and multiply by t
  std::vector<double> full;
  for (double v : p) {
    full.push_back(v);
    full.push_back(0.0);
  }
  full.pop_back();  // degree 7: t * (degree-6 even polynomial)
  full.push_back(0.0);
  return full;
}

Frame random_adapted(SplitMix64& rng) {
  while (true) {
    const AssociativePlane p = random_associative_plane(rng);
    Vec7 e4 = rng.gaussian_vec7();
    e4 -= e4.dot(p.u) * p.u;
    e4 -= e4.dot(p.v) * p.v;
    e4 -= e4.dot(p.w) * p.w;
    if (e4.norm() > 1e-6) return complete_g2_frame(p.u, p.v, e4.normalized());
  }
}

Form2 conjugate_into(const Mat7& canonical, const Frame& f) {
  return Form2::from_matrix_unchecked(f.as_matrix() * canonical * f.as_matrix().transpose());
}

}  // namespace

TEST_CASE("skew canonical form: trivial and structured inputs") {
  const SkewSpectrum zero = skew_canonical_form(Form2::zero());
  CHECK(zero.lambda == 0.0);
  CHECK(zero.frame.orthonormality_residual() < 1e-15);

  // u _| phi has all three block values equal to |u|.
  const SkewSpectrum s = skew_canonical_form(Form2::interior_phi(basis_vector(1)));
  CHECK(s.lambda == doctest::Approx(1.0));
  CHECK(s.nu == doctest::Approx(1.0));
  CHECK(s.mu == doctest::Approx(1.0));
}

TEST_CASE("skew canonical form reconstructs random inputs") {
  SplitMix64 rng(31);
  for (int t = 0; t < 200; ++t) {
    const Form2 x = Form2::from_matrix_unchecked(rng.gaussian_skew());
    const SkewSpectrum s = skew_canonical_form(x);
    CHECK(s.frame.orthonormality_residual() < 1e-12);
    const Mat7 in_frame = s.frame.as_matrix().transpose() * x.matrix() * s.frame.as_matrix();
    CHECK((in_frame - s.block_matrix()).norm() < 1e-9 * x.norm());
    CHECK(s.lambda >= s.nu);
    CHECK(s.nu >= s.mu);
    CHECK(s.mu >= 0.0);

    // Spectral oracle: char poly of X must equal t(t^2+l^2)(t^2+n^2)(t^2+m^2).
    const std::vector<double> got = char_poly(x.matrix());
    const std::vector<double> want = skew_spectrum_poly(s.lambda, s.nu, s.mu);
    REQUIRE(got.size() == want.size());
    double scale = 0.0;
    for (double w : want) scale = std::max(scale, std::abs(w));
    for (std::size_t i = 0; i < got.size(); ++i)
      CHECK(std::abs(got[i] - want[i]) < 1e-8 * std::max(1.0, scale));
  }
}

TEST_CASE("skew canonical form is deterministic") {
  SplitMix64 rng(32);
  const Form2 x = Form2::from_matrix_unchecked(rng.gaussian_skew());
  const SkewSpectrum a = skew_canonical_form(x);
  const SkewSpectrum b = skew_canonical_form(x);
  for (int i = 0; i < 7; ++i) CHECK((a.frame.e[(size_t)i] - b.frame.e[(size_t)i]).norm() == 0.0);
}

TEST_CASE("Lambda^2_7 canonical form") {
  const Lambda7CanonicalForm z = lambda7_canonical_form(Vec7::Zero());
  CHECK(z.lambda == 0.0);

  const Lambda7CanonicalForm s = lambda7_canonical_form(basis_vector(1));
  CHECK(s.lambda == 1.0);
  CHECK(s.pattern_residual < 1e-14);
  CHECK((s.frame.e[0] - basis_vector(1)).norm() == 0.0);

  SplitMix64 rng(33);
  for (int t = 0; t < 100; ++t) {
    const Vec7 u = rng.gaussian_vec7();
    const Lambda7CanonicalForm f = lambda7_canonical_form(u);
    CHECK(f.lambda == doctest::Approx(u.norm()));
    CHECK(f.pattern_residual < 1e-10);
    CHECK(classify_rank(Form2::interior_phi(u)).rank == 6);
  }
}

TEST_CASE("one reflection links the adapted pattern to the uniform block form") {
  // For u _| phi the adapted frame shows blocks (+l, +l, -l); flipping the
  // sign of the sixth vector (a reflection, so no longer adapted) produces
  // the uniform (-l, -l, -l) pattern of the generic skew form.
  const Vec7 u = 2.0 * basis_vector(1);
  const Lambda7CanonicalForm f = lambda7_canonical_form(u);
  Frame reflected = f.frame;
  reflected.e[5] = -reflected.e[5];
  reflected.g2_adapted = false;
  const Mat7 mb = reflected.as_matrix().transpose() *
                  Form2::interior_phi(u).matrix() * reflected.as_matrix();
  SkewSpectrum target;
  target.lambda = target.nu = target.mu = f.lambda;
  CHECK((mb + target.block_matrix()).norm() < 1e-13);  // uniform blocks, opposite sign
  CHECK(reflected.adapted_relations_residual() > 0.5);
}

TEST_CASE("canonical form of a member in block position") {
  // lambda = 2, mu = 1 on the standard frame: invariants must be read back.
  const Form2 x = Form2::from_matrix_unchecked(g2_canonical_matrix(2.0, 1.0));
  const G2CanonicalForm cf = g2_canonical_form(x);
  CHECK(cf.lambda == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(cf.nu == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(cf.mu == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(cf.rank_class == 6);
  CHECK(cf.reconstruction_residual < 1e-12);
  REQUIRE(cf.kernel_basis.size() == 1);
  CHECK(std::abs(std::abs(cf.kernel_basis[0].dot(basis_vector(3))) - 1.0) < 1e-12);
}

TEST_CASE("canonical form cases: zero, rank 4, rank 6, degenerate nu = mu") {
  const G2CanonicalForm zero = g2_canonical_form(Form2::zero());
  CHECK(zero.rank_class == 0);
  CHECK(zero.kernel_basis.size() == 7);

  SplitMix64 rng(34);

  // Case (ii) in block position: kernel is span{e3, e5, e6}, an associative
  // plane since e5 x e6 = -e3.
  {
    const Form2 x = Form2::from_matrix_unchecked(g2_canonical_matrix(1.0, 0.0));
    const G2CanonicalForm cf = g2_canonical_form(x);
    CHECK(cf.rank_class == 4);
    REQUIRE(cf.kernel_basis.size() == 3);
    Eigen::MatrixXd kb(7, 3), expect(7, 3);
    for (int k = 0; k < 3; ++k) kb.col(k) = cf.kernel_basis[(size_t)k];
    expect.col(0) = basis_vector(3);
    expect.col(1) = basis_vector(5);
    expect.col(2) = basis_vector(6);
    const auto angles = principal_angles(kb, expect);
    CHECK(angles.back() < 1e-12);
    CHECK(is_associative(cf.kernel_basis[0], cf.kernel_basis[1], cf.kernel_basis[2]).has_value());
    CHECK((cross(basis_vector(5), basis_vector(6)) + basis_vector(3)).norm() == 0.0);
  }

  // Case (ii): mu = 0 conjugated into a random adapted frame.
  for (int t = 0; t < 25; ++t) {
    const Form2 x = conjugate_into(g2_canonical_matrix(1.5, 0.0), random_adapted(rng));
    const G2CanonicalForm cf = g2_canonical_form(x);
    CHECK(cf.rank_class == 4);
    CHECK(cf.mu == 0.0);
    CHECK(cf.lambda == doctest::Approx(1.5).epsilon(1e-10));
    CHECK(cf.reconstruction_residual < 1e-10);
    REQUIRE(cf.kernel_basis.size() == 3);
    CHECK(is_associative(cf.kernel_basis[0], cf.kernel_basis[1], cf.kernel_basis[2]).has_value());
    for (const Vec7& k : cf.kernel_basis) CHECK(x.apply(k).norm() < 1e-10 * x.norm());
  }

  // Degenerate case nu = mu (lambda = 2 mu).
  for (int t = 0; t < 25; ++t) {
    const Form2 x = conjugate_into(g2_canonical_matrix(2.0, 1.0), random_adapted(rng));
    const G2CanonicalForm cf = g2_canonical_form(x);
    CHECK(cf.rank_class == 6);
    CHECK(std::abs(cf.nu - cf.mu) < 1e-9);
    CHECK(cf.reconstruction_residual < 1e-9);
  }

  // Generic members.
  for (int t = 0; t < 200; ++t) {
    const Form2 x = random_g2_element(rng);
    const G2CanonicalForm cf = g2_canonical_form(x);
    CHECK(cf.frame.orthonormality_residual() < 1e-10);
    CHECK(cf.frame.adapted_relations_residual() < 1e-10);
    CHECK(cf.reconstruction_residual < 1e-9);
    CHECK(std::abs(cf.lambda - cf.nu - cf.mu) < 1e-9 * std::max(1.0, x.norm()));
    CHECK((cf.rank_class == 4 || cf.rank_class == 6));
    // Restriction to the complement of the top associative block has
    // characteristic polynomial (t^2 + nu^2)(t^2 + mu^2).
    const Mat7 mb =
        cf.frame.as_matrix().transpose() * x.matrix() * cf.frame.as_matrix();
    const Eigen::Matrix4d r = mb.block<4, 4>(3, 3);
    const std::vector<double> got = char_poly(r);
    const double n2 = cf.nu * cf.nu, m2 = cf.mu * cf.mu;
    const std::vector<double> want = {1.0, 0.0, n2 + m2, 0.0, n2 * m2};
    for (std::size_t i = 0; i < got.size(); ++i)
      CHECK(std::abs(got[i] - want[i]) < 1e-8 * std::max(1.0, n2 * m2 + n2 + m2));
  }

  CHECK_THROWS_AS(g2_canonical_form(Form2::interior_phi(basis_vector(2))),
                  std::invalid_argument);
}

TEST_CASE("rank classification") {
  CHECK(classify_rank(Form2::zero()).rank == 0);

  const RankInfo wedge_rank = classify_rank(Form2::wedge(basis_vector(1), basis_vector(2)));
  CHECK(wedge_rank.rank == 2);
  CHECK_FALSE(wedge_rank.in_g2);
  // Rank-2 elements are of genuinely mixed type.
  const SplitForm2 s = split(Form2::wedge(basis_vector(1), basis_vector(2)));
  CHECK(s.part7.norm() > 1e-6);
  CHECK(s.part14.norm() > 1e-6);

  const RankInfo pure7 = classify_rank(Form2::interior_phi(basis_vector(1)));
  CHECK(pure7.rank == 6);
  CHECK_FALSE(pure7.in_g2);
  CHECK(project14(Form2::interior_phi(basis_vector(1))).norm() < 1e-13);

  SplitMix64 rng(35);
  long count4 = 0, count6 = 0;
  for (int t = 0; t < 300; ++t) {
    const RankInfo info = classify_rank(random_g2_element(rng));
    CHECK(info.in_g2);
    CHECK((info.rank == 4 || info.rank == 6));
    (info.rank == 4 ? count4 : count6)++;
  }
  CHECK(count6 > 0);  // generic members have full rank
  (void)count4;
}

TEST_CASE("rank-4 kernels are associative and carry the quaternionic block") {
  SplitMix64 rng(36);
  for (int t = 0; t < 50; ++t) {
    const double lambda = 0.5 + rng.uniform() * 3.0;
    const Form2 x = conjugate_into(g2_canonical_matrix(lambda, 0.0), random_adapted(rng));

    const RankInfo info = classify_rank(x);
    CHECK(info.rank == 4);
    CHECK(info.kernel_associative);

    const Rank4BlockForm bf = rank4_block_form(x);
    CHECK(bf.det_residual < 1e-9);
    CHECK(bf.reconstruction_residual < 1e-8);
    const double n2 = bf.a * bf.a + bf.b * bf.b + bf.c * bf.c;
    CHECK(std::sqrt(n2) == doctest::Approx(lambda).epsilon(1e-8));
  }

  const Rank4BlockForm zero = rank4_block_form(Form2::zero());
  CHECK(zero.a == 0.0);
  CHECK(zero.b == 0.0);
  CHECK(zero.c == 0.0);

  SplitMix64 rng2(37);
  CHECK_THROWS_AS(rank4_block_form(random_g2_element(rng2)), std::invalid_argument);
  CHECK_THROWS_AS(rank4_block_form(Form2::wedge(basis_vector(1), basis_vector(2))),
                  std::invalid_argument);
}

TEST_CASE("in the canonical frame the 4x4 block parameters are (0, 0, -nu)") {
  SplitMix64 rng(38);
  for (int t = 0; t < 50; ++t) {
    const Form2 x = random_g2_element(rng);
    const G2CanonicalForm cf = g2_canonical_form(x);
    const Mat7 mb = cf.frame.as_matrix().transpose() * x.matrix() * cf.frame.as_matrix();
    const double a = -mb(3, 4), b = -mb(3, 5), c = -mb(3, 6);
    CHECK(std::abs(a) < 1e-8 * x.norm());
    CHECK(std::abs(b) < 1e-8 * x.norm());
    CHECK(std::abs(c + cf.nu) < 1e-8 * x.norm());
  }
}

TEST_CASE("singular values in the guard band are flagged, not classified") {
  // mu = 5e-9 with lambda ~ 1 puts one singular value pair inside the
  // marginal band [1e-10, 1e-8] * sigma_max.
  const Form2 x = Form2::from_matrix_unchecked(torus_matrix(1.0 + 5e-9, 5e-9));
  const RankInfo info = classify_rank(x);
  CHECK(info.marginal);
  CHECK(info.in_g2);
  CHECK_THROWS_AS(rank4_block_form(x), MarginalNumericsError);

  // Just outside the band on either side the decision is clean.
  CHECK_FALSE(classify_rank(Form2::from_matrix_unchecked(torus_matrix(1.0 + 5e-7, 5e-7))).marginal);
  CHECK_FALSE(classify_rank(Form2::from_matrix_unchecked(torus_matrix(1.0, 0.0))).marginal);
}

TEST_CASE("maximal torus family") {
  const IdentityReport rep = maximal_torus_check(77);
  for (const auto& c : rep.checks) {
    INFO(c.name);
    CHECK(c.pass);
  }
  // The generators live on disjoint index pairs, so they commute exactly.
  CHECK(bracket(Form2::from_matrix_unchecked(torus_matrix(1.0, 0.0)),
                Form2::from_matrix_unchecked(torus_matrix(1.0, 1.0)))
            .norm() == 0.0);
}
