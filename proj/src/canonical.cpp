#include "g2alg/canonical.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>

#include "g2alg/linalg.hpp"

namespace g2alg {

namespace {

// Deterministic representative of a (possibly degenerate) eigenspace: among
// the candidate columns, choose the one whose first nonzero coordinate has
// the largest magnitude (lowest column index breaks ties), then fix the
// sign so that coordinate is positive.
Eigen::VectorXd deterministic_pick(const Eigen::MatrixXd& cols) {
  int best = -1;
  double best_mag = -1.0;
  for (int c = 0; c < cols.cols(); ++c) {
    int fnz = -1;
    for (int i = 0; i < cols.rows(); ++i)
      if (std::abs(cols(i, c)) > 1e-9) {
        fnz = i;
        break;
      }
    if (fnz < 0) continue;
    const double mag = std::abs(cols(fnz, c));
    if (mag > best_mag + 1e-12) {
      best_mag = mag;
      best = c;
    }
  }
  if (best < 0) throw std::runtime_error("no usable eigenvector candidate");
  Eigen::VectorXd v = cols.col(best);
  for (int i = 0; i < v.size(); ++i) {
    if (std::abs(v(i)) > 1e-9) {
      if (v(i) < 0) v = -v;
      break;
    }
  }
  return v;
}

void project_out(Vec7& y, const std::vector<Vec7>& basis) {
  for (int pass = 0; pass < 2; ++pass)
    for (const Vec7& b : basis) y -= b.dot(y) * b;
}

}  // namespace

Mat7 SkewSpectrum::block_matrix() const {
  Mat7 m = Mat7::Zero();
  m(1, 2) = -mu;
  m(2, 1) = mu;
  m(3, 4) = -nu;
  m(4, 3) = nu;
  m(5, 6) = -lambda;
  m(6, 5) = lambda;
  return m;
}

SkewSpectrum skew_canonical_form(const Form2& x) {
  SkewSpectrum out;
  const Mat7& m = x.matrix();
  const double scale = m.norm();
  if (scale == 0.0) {
    out.frame = Frame::standard();
    out.frame.g2_adapted = false;
    return out;
  }

  const Mat7 s = -(m * m);
  Eigen::SelfAdjointEigenSolver<Mat7> eig(s);
  if (eig.info() != Eigen::Success) throw std::runtime_error("eigensolver failed");
  const Vec7 ev = eig.eigenvalues();  // ascending
  const Mat7 vectors = eig.eigenvectors();
  const double sigma_max = std::sqrt(std::max(ev(6), 0.0));

  // Cluster the singular values (descending) and pair each eigenspace:
  // a unit u with S u = sigma^2 u is partnered with X(u)/sigma, which lies
  // in the same eigenspace, is orthogonal to u, and closes the 2x2 block.
  struct Block {
    double sigma;
    Vec7 u, ut;
  };
  std::vector<Block> blocks;
  std::vector<Vec7> used;

  int i = 6;
  while (i >= 0) {
    const double sigma = std::sqrt(std::max(ev(i), 0.0));
    if (sigma <= 1e-12 * sigma_max) break;  // kernel from here down
    int j = i;
    while (j >= 0 && std::sqrt(std::max(ev(j), 0.0)) >= sigma - 1e-7 * sigma_max) --j;
    const int size = i - j;  // cluster occupies ev(j+1..i)
    const int pairs = size / 2;
    Eigen::MatrixXd cluster(7, size);
    for (int c = 0; c < size; ++c) cluster.col(c) = vectors.col(j + 1 + c);
    for (int p = 0; p < pairs; ++p) {
      Eigen::MatrixXd candidates(7, size);
      int nc = 0;
      for (int c = 0; c < size; ++c) {
        Vec7 y = cluster.col(c);
        project_out(y, used);
        if (y.norm() > 0.5) candidates.col(nc++) = y.normalized();
      }
      if (nc == 0) throw std::runtime_error("eigenspace pairing failed");
      const Vec7 u = deterministic_pick(candidates.leftCols(nc));
      const Vec7 mu_vec = m * u;
      const double sig = mu_vec.norm();
      const Vec7 ut = mu_vec / sig;
      blocks.push_back({sig, u, ut});
      used.push_back(u);
      used.push_back(ut);
    }
    i = j;
  }

  std::sort(blocks.begin(), blocks.end(),
            [](const Block& a, const Block& b) { return a.sigma < b.sigma; });

  const std::vector<Vec7> kernel = orthogonal_complement(used);

  int slot = 0;
  for (const Vec7& z : kernel) out.frame.e[static_cast<std::size_t>(slot++)] = z;
  for (const Block& b : blocks) {
    out.frame.e[static_cast<std::size_t>(slot++)] = b.u;
    out.frame.e[static_cast<std::size_t>(slot++)] = b.ut;
  }
  out.frame.g2_adapted = false;

  const auto nb = blocks.size();
  out.lambda = nb >= 1 ? blocks[nb - 1].sigma : 0.0;
  out.nu = nb >= 2 ? blocks[nb - 2].sigma : 0.0;
  out.mu = nb >= 3 ? blocks[nb - 3].sigma : 0.0;
  return out;
}

Lambda7CanonicalForm lambda7_canonical_form(const Vec7& u) {
  Lambda7CanonicalForm out;
  out.lambda = u.norm();
  if (out.lambda == 0.0) {
    out.frame = Frame::standard();
    return out;
  }
  const Vec7 e1 = u / out.lambda;
  const std::vector<Vec7> c1 = orthogonal_complement(std::array<Vec7, 1>{e1});
  const Vec7 e2 = c1[0];
  const Vec7 e3 = cross(e1, e2);
  const std::vector<Vec7> c3 = orthogonal_complement(std::array<Vec7, 3>{e1, e2, e3});
  out.frame = complete_g2_frame(e1, e2, c3[0]);

  // In the adapted frame, u _| phi has blocks (+lambda, +lambda, -lambda)
  // on the (2,3), (4,5), (6,7) pairs; the flipped last block is what pins
  // the rank of a nonzero element of Lambda^2_7 at 6.
  const Mat7 mb =
      out.frame.as_matrix().transpose() * Form2::interior_phi(u).matrix() * out.frame.as_matrix();
  Mat7 expected = Mat7::Zero();
  expected(1, 2) = out.lambda;
  expected(2, 1) = -out.lambda;
  expected(3, 4) = out.lambda;
  expected(4, 3) = -out.lambda;
  expected(5, 6) = -out.lambda;
  expected(6, 5) = out.lambda;
  out.pattern_residual = (mb - expected).norm() / out.lambda;
  return out;
}

Mat7 g2_canonical_matrix(double lambda, double mu) {
  Mat7 m = Mat7::Zero();
  const double nu = lambda - mu;
  m(0, 1) = -lambda;
  m(1, 0) = lambda;
  m(3, 6) = nu;
  m(6, 3) = -nu;
  m(4, 5) = -mu;
  m(5, 4) = mu;
  return m;
}

Mat7 torus_matrix(double lambda, double mu) {
  Mat7 m = Mat7::Zero();
  const double nu = lambda - mu;
  m(1, 2) = -mu;
  m(2, 1) = mu;
  m(3, 4) = -nu;
  m(4, 3) = nu;
  m(5, 6) = -lambda;
  m(6, 5) = lambda;
  return m;
}

G2CanonicalForm g2_canonical_form(const Form2& x) {
  G2CanonicalForm out;
  const Mat7& m = x.matrix();
  const double scale = m.norm();
  const MembershipResiduals res = g2_membership_residuals(x);
  out.membership_residual = std::max(res.contraction, res.derivation);
  if (out.membership_residual > tol::kMembershipRel * std::max(1.0, scale))
    throw std::invalid_argument("input is not an element of Lambda^2_14");

  if (scale == 0.0) {
    out.frame = Frame::standard();
    out.rank_class = 0;
    for (int i = 1; i <= 7; ++i) out.kernel_basis.push_back(basis_vector(i));
    return out;
  }

  // (1) lambda and a unit vector in its eigenspace.
  const Mat7 s = -(m * m);
  Eigen::SelfAdjointEigenSolver<Mat7> eig(s);
  if (eig.info() != Eigen::Success) throw std::runtime_error("eigensolver failed");
  const Vec7 ev = eig.eigenvalues();
  const double lambda = std::sqrt(std::max(ev(6), 0.0));
  int lo = 6;
  while (lo > 0 && ev(lo - 1) >= ev(6) - 1e-7 * lambda * lambda) --lo;
  Eigen::MatrixXd top(7, 7 - lo);
  for (int c = lo; c <= 6; ++c) top.col(c - lo) = eig.eigenvectors().col(c);
  const Vec7 e1 = deterministic_pick(top);

  // (2) e2 closes the lambda block with X_12 = -lambda; e3 = e1 x e2 spans
  // the kernel direction of the associative 3-plane of the top block.
  const Vec7 e2 = (m * e1).normalized();
  const Vec7 e3 = cross(e1, e2);

  // (3) restrict to the orthogonal 4-plane and take nu from its spectrum.
  const std::vector<Vec7> comp = orthogonal_complement(std::array<Vec7, 3>{e1, e2, e3});
  Eigen::Matrix<double, 7, 4> b;
  for (int c = 0; c < 4; ++c) b.col(c) = comp[static_cast<std::size_t>(c)];
  const Eigen::Matrix4d r = b.transpose() * m * b;
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> eig4(-(r * r));
  if (eig4.info() != Eigen::Success) throw std::runtime_error("eigensolver failed");
  const Eigen::Vector4d ev4 = eig4.eigenvalues();
  const double nu_spec = std::sqrt(std::max(ev4(3), 0.0));
  if (nu_spec < 0.25 * lambda)
    throw std::runtime_error("restricted spectrum violates nu >= lambda/2; input is not in Lambda^2_14");
  int lo4 = 3;
  while (lo4 > 0 && ev4(lo4 - 1) >= ev4(3) - 1e-7 * lambda * lambda) --lo4;
  Eigen::MatrixXd top4(4, 4 - lo4);
  for (int c = lo4; c <= 3; ++c) top4.col(c - lo4) = eig4.eigenvectors().col(c);
  Vec7 e4 = b * deterministic_pick(top4);
  e4.normalize();

  // (4) the rest of the adapted frame.
  Frame f = complete_g2_frame(e1, e2, e4);
  Mat7 mb = f.as_matrix().transpose() * m * f.as_matrix();

  // (5) X_45 and X_46 vanish automatically for exact members; the rotation
  // below is numerical insurance only.
  if (std::abs(mb(3, 4)) > 1e-10 * scale) {
    const double alpha = std::atan2(mb(3, 4), mb(3, 5));
    const Vec7 e1r = std::cos(alpha) * e1 - std::sin(alpha) * e2;
    const Vec7 e2r = std::sin(alpha) * e1 + std::cos(alpha) * e2;
    f = complete_g2_frame(e1r.normalized(), e2r.normalized(), e4);
    mb = f.as_matrix().transpose() * m * f.as_matrix();
  }

  // (6) read off the invariants and classify.
  const double nu = mb(3, 6);
  double mu = -mb(4, 5);
  if (std::abs(mu) <= tol::kRankRel * lambda) mu = std::max(mu, 0.0);
  if (std::abs(lambda - nu - mu) > tol::kMembershipRel * std::max(1.0, scale))
    throw std::runtime_error("canonical-form constraint lambda = nu + mu violated");

  out.frame = f;
  out.lambda = lambda;
  out.nu = nu;
  out.mu = std::max(mu, 0.0);
  out.rank_class = (out.mu <= tol::kRankRel * lambda) ? 4 : 6;
  if (out.rank_class == 4) {
    out.kernel_basis = {f.e[2], f.e[4], f.e[5]};
    out.mu = 0.0;
  } else {
    out.kernel_basis = {f.e[2]};
  }
  out.reconstruction_residual = (mb - g2_canonical_matrix(out.lambda, out.mu)).norm() / scale;
  return out;
}

RankInfo classify_rank(const Form2& x) {
  RankInfo info;
  const Mat7& m = x.matrix();
  const double scale = m.norm();

  Eigen::JacobiSVD<Mat7> svd(m, Eigen::ComputeFullV);
  const Vec7 sv = svd.singularValues();
  for (int i = 0; i < 7; ++i) info.singular_values[static_cast<std::size_t>(i)] = sv(i);
  const double smax = sv(0);

  if (smax == 0.0) {
    info.rank = 0;
  } else {
    for (int i = 0; i < 7; ++i) {
      if (sv(i) > tol::kRankRel * smax) ++info.rank;
      if (sv(i) > tol::kRankMarginalRel * smax && sv(i) <= tol::kRankRel * smax)
        info.marginal = true;
    }
  }

  const MembershipResiduals res = g2_membership_residuals(x);
  info.membership_residual = std::max(res.contraction, res.derivation);
  info.in_g2 = info.membership_residual <= tol::kMembershipRel * std::max(1.0, scale);

  for (int i = info.rank; i < 7; ++i) info.kernel_basis.push_back(svd.matrixV().col(i));

  if (info.in_g2) {
    if (info.rank == 2 && !info.marginal)
      throw std::runtime_error("element of Lambda^2_14 measured at rank 2: numerical failure");
    if (info.rank == 0) {
      info.kernel_associative = true;
    } else if (info.rank == 4) {
      const auto plane =
          is_associative(info.kernel_basis[0], info.kernel_basis[1], info.kernel_basis[2]);
      info.kernel_associative = plane.has_value();
    }
  }
  return info;
}

Rank4BlockForm rank4_block_form(const Form2& x) {
  Rank4BlockForm out;
  const Mat7& m = x.matrix();
  const double scale = m.norm();
  if (!is_in_g2(x)) throw std::invalid_argument("input is not an element of Lambda^2_14");

  RankInfo info = classify_rank(x);
  if (info.marginal) throw MarginalNumericsError("rank decision falls in the marginal band");
  if (info.rank > 4) throw std::invalid_argument("rank exceeds 4");

  if (info.rank == 0) {
    out.frame = Frame::standard();
    return out;
  }

  const std::vector<Vec7> kb = orthonormalize(
      std::array<Vec7, 3>{info.kernel_basis[0], info.kernel_basis[1], info.kernel_basis[2]});
  const Vec7 e1 = kb[0];
  const Vec7 e2 = kb[1];
  const Vec7 e3 = cross(e1, e2);
  if ((m * e3).norm() > 1e-8 * scale)
    throw std::runtime_error("kernel is not closed under the cross product");
  const std::vector<Vec7> comp = orthogonal_complement(std::array<Vec7, 3>{e1, e2, e3});
  out.frame = complete_g2_frame(e1, e2, comp[0]);

  const Mat7 mb = out.frame.as_matrix().transpose() * m * out.frame.as_matrix();
  out.a = -mb(3, 4);
  out.b = -mb(3, 5);
  out.c = -mb(3, 6);

  const double n2 = out.a * out.a + out.b * out.b + out.c * out.c;
  const double det_y = mb.block<4, 4>(3, 3).determinant();
  out.det_residual = std::abs(det_y - n2 * n2) / std::max(1.0, n2 * n2);

  Mat7 pattern = Mat7::Zero();
  const double y[4][4] = {{0, -out.a, -out.b, -out.c},
                          {out.a, 0, -out.c, out.b},
                          {out.b, out.c, 0, -out.a},
                          {out.c, -out.b, out.a, 0}};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) pattern(3 + i, 3 + j) = y[i][j];
  out.reconstruction_residual = (mb - pattern).norm() / scale;
  return out;
}

IdentityReport maximal_torus_check(std::uint64_t seed) {
  IdentityReport rep;
  const Form2 t1 = Form2::from_matrix_unchecked(torus_matrix(1.0, 0.0));
  const Form2 t2 = Form2::from_matrix_unchecked(torus_matrix(1.0, 1.0));
  const Form2 member = Form2::from_matrix_unchecked(torus_matrix(2.0, 1.0));

  auto membership = [](const Form2& z) {
    const MembershipResiduals r = g2_membership_residuals(z);
    return std::max(r.contraction, r.derivation);
  };
  rep.add(Check::make("torus-membership",
                      "block family with lambda = nu + mu lies in Lambda^2_14",
                      std::max({membership(t1), membership(t2), membership(member)}), 1e-12, 3));
  rep.add(Check::make("torus-abelian", "torus generators commute",
                      bracket(t1, t2).norm(), 1e-12, 1));

  // Centralizer of {t1, t2} inside Lambda^2_14, as the null space of
  // Z -> ([Z, t1], [Z, t2]) restricted to a 14-dimensional basis.
  const Eigen::MatrixXd basis = g2_coord_basis();
  Eigen::MatrixXd map(42, 14);
  for (int c = 0; c < 14; ++c) {
    const Form2 z = form2_from_coords(basis.col(c));
    map.block<21, 1>(0, c) = form2_coords(bracket(z, t1));
    map.block<21, 1>(21, c) = form2_coords(bracket(z, t2));
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(map, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  int null_dim = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) <= 1e-10 * sv(0)) ++null_dim;
  rep.add(Check::make_flag("torus-centralizer-dim", "centralizer of the torus is 2-dimensional",
                           null_dim == 2, static_cast<double>(null_dim), 2.0, 14));

  Eigen::MatrixXd null_coords(21, null_dim);
  for (int k = 0; k < null_dim; ++k)
    null_coords.col(k) = basis * svd.matrixV().col(14 - null_dim + k);
  Eigen::MatrixXd torus_coords(21, 2);
  torus_coords.col(0) = form2_coords(t1);
  torus_coords.col(1) = form2_coords(t2);
  const std::vector<double> angles = principal_angles(null_coords, torus_coords);
  rep.add(Check::make("torus-centralizer-span", "centralizer coincides with the torus span",
                      angles.empty() ? 1.0 : angles.back(), 1e-8,
                      static_cast<long>(angles.size())));

  // Sampled maximality: commuting elements drawn from Lambda^2_14 never
  // leave span(t).
  SplitMix64 rng(seed);
  const Eigen::MatrixXd torus_on = orthonormal_columns(torus_coords);
  const Eigen::MatrixXd null_on = orthonormal_columns(null_coords);
  double worst = 0.0;
  const int samples = 100;
  for (int s = 0; s < samples; ++s) {
    const Eigen::Matrix<double, 21, 1> wc = form2_coords(random_g2_element(rng));
    const Eigen::VectorXd zc = null_on * (null_on.transpose() * wc);
    const double zn = zc.norm();
    if (zn <= 1e-12) continue;
    const Eigen::VectorXd rem = zc - torus_on * (torus_on.transpose() * zc);
    worst = std::max(worst, rem.norm() / zn);
  }
  {
    const Eigen::Matrix<double, 21, 1> g = form2_coords(t1);
    const Eigen::VectorXd rem = g - torus_on * (torus_on.transpose() * g);
    worst = std::max(worst, rem.norm() / g.norm());
  }
  rep.add(Check::make("torus-maximal", "sampled commuting elements lie in the torus span", worst,
                      1e-8, samples));
  return rep;
}

}  // namespace g2alg
