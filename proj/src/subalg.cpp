#include "g2alg/subalg.hpp"

#include <cmath>
#include <stdexcept>

#include "g2alg/canonical.hpp"
#include "g2alg/decomp.hpp"

namespace g2alg {

Subalgebra make_subalgebra(std::vector<Form2> basis) {
  Subalgebra s;
  s.basis = std::move(basis);
  const int n = s.dim();
  s.structure.assign(static_cast<std::size_t>(n) * n * n, 0.0);

  Eigen::MatrixXd b(21, n);
  for (int k = 0; k < n; ++k) b.col(k) = form2_coords(s.basis[static_cast<std::size_t>(k)]);
  const Eigen::MatrixXd gram = b.transpose() * b;
  Eigen::LDLT<Eigen::MatrixXd> solver(gram);

  double worst = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Form2 br = bracket(s.basis[static_cast<std::size_t>(i)], s.basis[static_cast<std::size_t>(j)]);
      const Eigen::Matrix<double, 21, 1> rhs = form2_coords(br);
      const Eigen::VectorXd coef = solver.solve(b.transpose() * rhs);
      for (int k = 0; k < n; ++k)
        s.structure[static_cast<std::size_t>((i * n + j) * n + k)] = coef(k);
      const double miss = (rhs - b * coef).norm();
      const double denom = rhs.norm();
      worst = std::max(worst, denom > 1e-12 ? miss / denom : miss);
    }
  s.closure_residual = worst;
  return s;
}

Subalgebra lambda2_of_plane(const AssociativePlane& p) {
  return make_subalgebra(
      {Form2::wedge(p.v, p.w), Form2::wedge(p.w, p.u), Form2::wedge(p.u, p.v)});
}

Subalgebra psi_of_plane(const AssociativePlane& p) {
  if (psi_vector(p.u, p.v, p.w).norm() > tol::kAssoc)
    throw std::invalid_argument("plane is not associative; Psi(P) does not close");
  return make_subalgebra({0.5 * psi_pair(p.v, p.w), 0.5 * psi_pair(p.w, p.u),
                          -0.5 * psi_pair(p.u, p.v)});
}

ThetaDecomposition theta_of_plane(const AssociativePlane& p) {
  ThetaDecomposition t;
  t.lambda2P = lambda2_of_plane(p);
  t.psiP = psi_of_plane(p);

  std::vector<Form2> all = t.lambda2P.basis;
  all.insert(all.end(), t.psiP.basis.begin(), t.psiP.basis.end());
  t.theta = make_subalgebra(std::move(all));

  for (const Form2& a : t.lambda2P.basis)
    for (const Form2& b : t.psiP.basis) {
      t.cross_bracket_residual = std::max(t.cross_bracket_residual, bracket(a, b).norm());
      t.orthogonality_residual =
          std::max(t.orthogonality_residual, std::abs(inner(a, b)) / (a.norm() * b.norm()));
    }
  return t;
}

namespace {

Eigen::MatrixXd theta_coords(const ThetaDecomposition& t) {
  Eigen::MatrixXd b(21, 6);
  for (int k = 0; k < 6; ++k) b.col(k) = form2_coords(t.theta.basis[static_cast<std::size_t>(k)]);
  return b;
}

}  // namespace

ThetaIntersection theta_intersect(const AssociativePlane& p, const AssociativePlane& q) {
  ThetaIntersection out;

  const std::vector<double> plane_angles =
      principal_angles(p.basis_matrix(), q.basis_matrix());
  if (!plane_angles.empty() && plane_angles.back() < tol::kSamePlaneAngle) {
    const ThetaDecomposition tp = theta_of_plane(p);
    out.dim = 6;
    out.planes_equal = true;
    out.generators = tp.theta.basis;
    out.principal_angles.assign(6, 0.0);
    return out;
  }

  const ThetaDecomposition tp = theta_of_plane(p);
  const ThetaDecomposition tq = theta_of_plane(q);
  const SubspaceIntersection meet = intersect_subspaces(theta_coords(tp), theta_coords(tq));
  if (meet.marginal)
    throw MarginalNumericsError("Theta(P) n Theta(Q) dimension decision is marginal");
  out.dim = meet.dim;
  out.principal_angles = meet.angles;
  if (out.dim > 1)
    throw std::runtime_error("intersection of Theta spans for distinct planes exceeds dimension 1");

  if (out.dim == 1) {
    const Form2 gen = form2_from_coords(meet.basis.col(0));
    out.generators.push_back(gen);
    // The generator must be v _| phi for the shared direction v; invert the
    // isomorphism u -> u _| phi to identify v.
    Vec7 v = project7_vector(gen);
    const double vn = v.norm();
    if (vn < 1e-10) throw std::runtime_error("intersection generator has no Lambda^2_7 part");
    v /= vn;
    // Orient toward P's side of the shared line.
    const SubspaceIntersection shared =
        intersect_subspaces(p.basis_matrix(), q.basis_matrix());
    if (shared.dim == 1 && shared.basis.col(0).dot(v) < 0) v = -v;
    out.shared_direction = v;

    const Eigen::Matrix<double, 21, 1> gc = form2_coords(gen).normalized();
    const Eigen::Matrix<double, 21, 1> vc = form2_coords(Form2::interior_phi(v)).normalized();
    out.generator_angle = std::asin(std::min(1.0, (gc - gc.dot(vc) * vc).norm()));
  }
  return out;
}

IdentityReport proper_subspace_check(const std::vector<Vec7>& v) {
  if (v.empty() || v.size() > 7) throw std::invalid_argument("need 1..7 spanning vectors");
  const std::vector<Vec7> on = orthonormalize(v);
  const int d = static_cast<int>(on.size());

  const int pairs = d * (d - 1) / 2;
  Eigen::MatrixXd wedges(21, std::max(pairs, 1));
  if (pairs == 0) wedges = Eigen::MatrixXd::Zero(21, 0);
  int s = 0;
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j)
      wedges.col(s++) = form2_coords(
          Form2::wedge(on[static_cast<std::size_t>(i)], on[static_cast<std::size_t>(j)]));

  Eigen::MatrixXd contractions(21, d);
  for (int i = 0; i < d; ++i)
    contractions.col(i) = form2_coords(Form2::interior_phi(on[static_cast<std::size_t>(i)]));

  const SubspaceIntersection meet = intersect_subspaces(wedges, contractions);

  IdentityReport rep;
  const int expected = (d == 7) ? 7 : 0;
  rep.add(Check::make_flag(
      "wedge-contraction-intersection",
      "Lambda^2(V) n (V _| phi) is 0 for proper V and Lambda^2_7 for V = R^7",
      meet.dim == expected, static_cast<double>(meet.dim), static_cast<double>(expected), d));
  if (d == 7) {
    const std::vector<double> angles = principal_angles(meet.basis, lambda27_coord_basis());
    rep.add(Check::make("full-space-identification",
                        "for V = R^7 the intersection is exactly Lambda^2_7",
                        angles.empty() ? 1.0 : angles.back(), 1e-8, 7));
  }
  return rep;
}

IdentityReport coassoc_selfdual_check(const AssociativePlane& p) {
  IdentityReport rep;

  // Oriented orthonormal basis of P^perp with vol_P ^ vol_{P^perp} = vol.
  std::vector<Vec7> n = orthogonal_complement(std::array<Vec7, 3>{p.u, p.v, p.w});
  Mat7 all;
  all.col(0) = p.u;
  all.col(1) = p.v;
  all.col(2) = p.w;
  for (int k = 0; k < 4; ++k) all.col(3 + k) = n[static_cast<std::size_t>(k)];
  if (all.determinant() < 0) std::swap(n[2], n[3]);

  auto dual_triple = [&n](int sign) {
    std::vector<Form2> b;
    b.push_back(Form2::wedge(n[0], n[1]) + sign * Form2::wedge(n[2], n[3]));
    b.push_back(Form2::wedge(n[0], n[2]) - sign * Form2::wedge(n[1], n[3]));
    b.push_back(Form2::wedge(n[0], n[3]) + sign * Form2::wedge(n[1], n[2]));
    return b;
  };

  auto max_membership = [](const std::vector<Form2>& forms) {
    double r = 0.0;
    for (const Form2& f : forms) {
      const MembershipResiduals m = g2_membership_residuals(f);
      r = std::max(r, std::max(m.contraction, m.derivation) / f.norm());
    }
    return r;
  };

  const double plus_res = max_membership(dual_triple(+1));
  rep.add(Check::make("selfdual-in-g2", "Lambda^2_+(P^perp) is contained in Lambda^2_14",
                      plus_res, tol::kMembershipRel, 3));
  if (plus_res > tol::kMembershipRel) {
    const double minus_res = max_membership(dual_triple(-1));
    rep.add(Check::make_flag("antiselfdual-in-g2",
                             "orientation mismatch: the anti-self-dual forms landed in "
                             "Lambda^2_14 instead",
                             false, minus_res, tol::kMembershipRel, 3));
  }

  // Neither so(3) factor of Theta(P) sits inside Lambda^2_14: each basis
  // element keeps a macroscopic Lambda^2_7 part.
  double min_pi7 = 1e300;
  for (const Form2& f : lambda2_of_plane(p).basis)
    min_pi7 = std::min(min_pi7, project7(f).norm() / f.norm());
  rep.add(Check::make_flag("lambda2P-not-in-g2",
                           "Lambda^2(P) basis elements have nonzero Lambda^2_7 part",
                           min_pi7 > 1e-6, min_pi7, 1e-6, 3));
  min_pi7 = 1e300;
  for (const Form2& f : psi_of_plane(p).basis)
    min_pi7 = std::min(min_pi7, project7(f).norm() / f.norm());
  rep.add(Check::make_flag("psiP-not-in-g2",
                           "Psi(P) basis elements have nonzero Lambda^2_7 part", min_pi7 > 1e-6,
                           min_pi7, 1e-6, 3));
  return rep;
}

}  // namespace g2alg
