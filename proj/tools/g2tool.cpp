// Command-line driver for the structure-tensor package on R^7: identity
// verification, canonical forms, rank classification, seeded sampling, and
// the so(4) subalgebras attached to associative 3-planes.
//
// Exit codes: 0 success, 1 verification failure, 2 precondition failure,
// 3 marginal/ambiguous numerics.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "g2alg/canonical.hpp"
#include "g2alg/decomp.hpp"
#include "g2alg/forms.hpp"
#include "g2alg/io.hpp"
#include "g2alg/linalg.hpp"
#include "g2alg/subalg.hpp"
#include "g2alg/verify.hpp"

using namespace g2alg;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitPrecondition = 2;
constexpr int kExitMarginal = 3;

std::vector<MatrixDocument> load_documents(const std::string& path) {
  if (path == "-") return read_documents(std::cin);
  std::ifstream f(path);
  if (!f) throw std::invalid_argument("cannot open input: " + path);
  return read_documents(f);
}

MatrixDocument load_document(const std::string& path, DocKind want) {
  for (auto& d : load_documents(path))
    if (d.kind == want) return d;
  throw std::invalid_argument(std::string("no ") + to_string(want) + " document in " + path);
}

struct OutputTarget {
  std::ofstream file;
  std::ostream& stream() { return file.is_open() ? file : std::cout; }
  explicit OutputTarget(const std::string& path) {
    if (!path.empty()) {
      file.open(path);
      if (!file) throw std::invalid_argument("cannot open output: " + path);
    }
  }
};

void print_report(const IdentityReport& rep) {
  std::fputs(render_report(rep).c_str(), stdout);
}

int cmd_identities(int trials, std::uint64_t seed, const std::string& corrupt) {
  IdentityReport rep;
  if (corrupt.empty()) {
    rep = verify_contraction_identities();
  } else {
    int i = 0, j = 0, k = 0;
    if (std::sscanf(corrupt.c_str(), "%d,%d,%d", &i, &j, &k) != 3)
      throw std::invalid_argument("--corrupt-phi wants i,j,k");
    rep = verify_contraction_identities(
        StructureTensors::standard().with_phi_sign_flipped(i, j, k));
  }
  if (trials > 0) {
    rep.append(verify_psi_identities(trials, seed));
    rep.append(verify_bracket_identities(trials, seed ^ 0x5851f42d4c957f2dull));
  }
  print_report(rep);
  return rep.all_pass() ? kExitOk : kExitVerificationFailure;
}

int cmd_canonical(const std::string& input, const std::string& mode, const std::string& output,
                  NumberFormat fmt, double tolerance) {
  const MatrixDocument doc = load_document(input, DocKind::Skew7);
  const Form2 x = doc.as_skew7();
  const double scale = std::max(1.0, x.norm());

  if (mode == "so7") {
    const SkewSpectrum s = skew_canonical_form(x);
    const Mat7 in_frame = s.frame.as_matrix().transpose() * x.matrix() * s.frame.as_matrix();
    const double recon = (in_frame - s.block_matrix()).norm() / scale;
    std::printf("lambda %.17g\nnu     %.17g\nmu     %.17g\n", s.lambda, s.nu, s.mu);
    std::printf("[so7-block-form] reconstruction residual %.3e  %s\n", recon,
                recon <= 1e-9 ? "PASS" : "FAIL");
    OutputTarget out(output);
    write_document(out.stream(), MatrixDocument::frame7(s.frame, "canonical frame"), fmt);
    write_document(out.stream(),
                   MatrixDocument::skew7(Form2::from_matrix_unchecked(s.block_matrix()),
                                         "block matrix"),
                   fmt);
    return recon <= 1e-9 ? kExitOk : kExitVerificationFailure;
  }

  const MembershipResiduals mr = g2_membership_residuals(x);
  const double mres = std::max(mr.contraction, mr.derivation);
  std::printf("membership residual %.3e (tolerance %.3e)\n", mres, tolerance * scale);
  if (mres > tolerance * scale) {
    std::fprintf(stderr, "input is not in Lambda^2_14\n");
    return kExitPrecondition;
  }
  const G2CanonicalForm cf = g2_canonical_form(x);
  std::printf("lambda %.17g\nnu     %.17g\nmu     %.17g\nrank   %d\n", cf.lambda, cf.nu, cf.mu,
              cf.rank_class);
  for (std::size_t i = 0; i < cf.kernel_basis.size(); ++i) {
    std::printf("kernel[%zu]", i);
    for (int c = 0; c < 7; ++c) std::printf(" %.10g", cf.kernel_basis[i](c));
    std::printf("\n");
  }
  const double constraint = std::abs(cf.lambda - cf.nu - cf.mu) / scale;
  std::printf("[lambda = nu + mu] residual %.3e  %s\n", constraint,
              constraint <= 1e-9 ? "PASS" : "FAIL");
  std::printf("[canonical block pattern] reconstruction residual %.3e  %s\n",
              cf.reconstruction_residual, cf.reconstruction_residual <= 1e-8 ? "PASS" : "FAIL");
  OutputTarget out(output);
  write_document(out.stream(), MatrixDocument::frame7(cf.frame, "adapted frame"), fmt);
  write_document(out.stream(),
                 MatrixDocument::skew7(Form2::from_matrix_unchecked(cf.block_matrix()),
                                       "block matrix"),
                 fmt);
  return (constraint <= 1e-9 && cf.reconstruction_residual <= 1e-8)
             ? kExitOk
             : kExitVerificationFailure;
}

int cmd_classify(const std::string& input) {
  const MatrixDocument doc = load_document(input, DocKind::Skew7);
  const Form2 x = doc.as_skew7();
  const RankInfo info = classify_rank(x);

  std::printf("rank %d%s\n", info.rank, info.marginal ? " (marginal)" : "");
  std::printf("singular values");
  for (double s : info.singular_values) std::printf(" %.10g", s);
  std::printf("\n");
  const double n7 = project7(x).norm();
  const double n14 = project14(x).norm();
  std::printf("norm of Lambda^2_7 part  %.10g\nnorm of Lambda^2_14 part %.10g\n", n7, n14);
  std::printf("membership residual %.3e -> %s\n", info.membership_residual,
              info.in_g2 ? "in Lambda^2_14" : "not in Lambda^2_14");
  if (info.marginal) {
    std::fprintf(stderr, "rank decision falls in the marginal band\n");
    return kExitMarginal;
  }
  if (info.in_g2 && info.rank <= 4 && info.rank > 0) {
    std::printf("kernel associative: %s\n", info.kernel_associative ? "yes" : "no");
    const Rank4BlockForm bf = rank4_block_form(x);
    std::printf("block parameters a %.10g  b %.10g  c %.10g\n", bf.a, bf.b, bf.c);
    std::printf("[det Y = (a^2+b^2+c^2)^2] residual %.3e  %s\n", bf.det_residual,
                bf.det_residual <= 1e-9 ? "PASS" : "FAIL");
    if (!info.kernel_associative || bf.det_residual > 1e-9) return kExitVerificationFailure;
  }
  return kExitOk;
}

int cmd_random(const std::string& kind, std::uint64_t seed, int count,
               const std::string& output, NumberFormat fmt) {
  if (count < 1) throw std::invalid_argument("--count must be >= 1");
  SplitMix64 rng(seed);
  OutputTarget out(output);
  for (int i = 0; i < count; ++i) {
    char label[64];
    std::snprintf(label, sizeof label, "%s sample %d", kind.c_str(), i);
    if (kind == "g2") {
      MatrixDocument d = MatrixDocument::skew7(random_g2_element(rng), label);
      d.seed = seed;
      write_document(out.stream(), d, fmt);
    } else if (kind == "skew") {
      MatrixDocument d =
          MatrixDocument::skew7(Form2::from_matrix_unchecked(rng.gaussian_skew()), label);
      d.seed = seed;
      write_document(out.stream(), d, fmt);
    } else if (kind == "assoc-plane") {
      MatrixDocument d = MatrixDocument::plane3(random_associative_plane(rng), label);
      d.seed = seed;
      write_document(out.stream(), d, fmt);
    } else {
      throw std::invalid_argument("kind must be one of g2, skew, assoc-plane");
    }
  }
  return kExitOk;
}

int cmd_theta(const std::string& p_path, const std::string& q_path) {
  const auto rows_p = load_document(p_path, DocKind::Plane3).as_plane3();
  double psi_res = 0.0;
  const auto p = is_associative(rows_p[0], rows_p[1], rows_p[2], &psi_res);
  if (!p) {
    std::fprintf(stderr, "plane P is not associative: psi residual %.3e\n", psi_res);
    return kExitPrecondition;
  }

  if (q_path.empty()) {
    const ThetaDecomposition t = theta_of_plane(*p);
    std::printf("basis of Theta(P): v^w, w^u, u^v, Psi_vw/2, Psi_wu/2, -Psi_uv/2\n");
    for (int i = 0; i < 6; ++i) {
      std::printf("B%d coords (ij, i<j):", i + 1);
      const auto coords = form2_coords(t.theta.basis[(size_t)i]);
      for (int k = 0; k < 21; ++k) std::printf(" %.10g", coords(k));
      std::printf("\n");
    }
    for (int i = 0; i < 6; ++i) {
      std::printf("structure constants of B%d (zeros omitted):", i + 1);
      for (int j = 0; j < 6; ++j)
        for (int k = 0; k < 6; ++k)
          if (std::abs(t.theta.c(i, j, k)) > 1e-9)
            std::printf(" c(%d,%d,%d)=%.10g", i + 1, j + 1, k + 1, t.theta.c(i, j, k));
      std::printf("\n");
    }
    std::printf("[so(3)+so(3) closure] residual %.3e  %s\n", t.theta.closure_residual,
                t.theta.closure_residual <= 1e-9 ? "PASS" : "FAIL");
    std::printf("[factors commute] residual %.3e  %s\n", t.cross_bracket_residual,
                t.cross_bracket_residual <= 1e-9 ? "PASS" : "FAIL");

    Eigen::MatrixXd theta_b(21, 6);
    for (int k = 0; k < 6; ++k) theta_b.col(k) = form2_coords(t.theta.basis[(size_t)k]);
    const SubspaceIntersection meet =
        intersect_subspaces(theta_b, lambda27_coord_basis(), 1e-6);
    double angle = 1.0;
    if (meet.dim == 3) {
      Eigen::MatrixXd pulled(7, 3);
      for (int k = 0; k < 3; ++k)
        pulled.col(k) = project7_vector(form2_from_coords(meet.basis.col(k)));
      const auto angles = principal_angles(pulled, p->basis_matrix());
      angle = angles.empty() ? 1.0 : angles.back();
    }
    std::printf("[Theta(P) n Lambda^2_7 = P _| phi] dim %d angle %.3e  %s\n", meet.dim, angle,
                (meet.dim == 3 && angle <= 1e-6) ? "PASS" : "FAIL");
    const bool ok = t.theta.closure_residual <= 1e-9 && t.cross_bracket_residual <= 1e-9 &&
                    meet.dim == 3 && angle <= 1e-6;
    return ok ? kExitOk : kExitVerificationFailure;
  }

  const auto rows_q = load_document(q_path, DocKind::Plane3).as_plane3();
  const auto q = is_associative(rows_q[0], rows_q[1], rows_q[2], &psi_res);
  if (!q) {
    std::fprintf(stderr, "plane Q is not associative: psi residual %.3e\n", psi_res);
    return kExitPrecondition;
  }
  const SubspaceIntersection planes = intersect_subspaces(p->basis_matrix(), q->basis_matrix());
  const ThetaIntersection meet = theta_intersect(*p, *q);
  std::printf("dim(P n Q) %d\ndim(Theta(P) n Theta(Q)) %d\n", planes.dim, meet.dim);
  if (meet.dim == 1) {
    std::printf("shared direction");
    for (int c = 0; c < 7; ++c) std::printf(" %.10g", meet.shared_direction(c));
    std::printf("\n[generator = v _| phi] angle %.3e  %s\n", meet.generator_angle,
                meet.generator_angle <= 1e-6 ? "PASS" : "FAIL");
    if (meet.generator_angle > 1e-6) return kExitVerificationFailure;
  }
  const bool consistent = meet.planes_equal ? meet.dim == 6 : meet.dim == planes.dim;
  std::printf("[intersection = (P n Q) _| phi] %s\n", consistent ? "PASS" : "FAIL");
  return consistent ? kExitOk : kExitVerificationFailure;
}

int cmd_verify_all(std::uint64_t seed) {
  const auto results = run_verification_suite(seed);
  std::fputs(render_suite(results).c_str(), stdout);
  const bool ok = suite_passes(results);
  std::printf("overall: %s\n", ok ? "PASS" : "FAIL");
  return ok ? kExitOk : kExitVerificationFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"algebra of the standard 3-form on R^7: identities, canonical forms, subalgebras"};
  app.require_subcommand(1);

  std::uint64_t seed = 42;
  int trials = 1000;
  int count = 1;
  double tolerance = tol::kMembershipRel;
  std::string input, output, second, mode = "g2", kind, format = "dec", corrupt;

  auto* identities = app.add_subcommand("identities", "exact and randomized identity suites");
  identities->add_option("--trials", trials, "random trials (0 = exact checks only)");
  identities->add_option("--seed", seed, "PRNG seed");
  identities->add_option("--corrupt-phi", corrupt,
                         "flip the sign of one phi coefficient i,j,k (diagnostic)");

  auto* canonical = app.add_subcommand("canonical", "canonical block form of a skew matrix");
  canonical->add_option("input", input, "skew7 document path or -")->required();
  canonical->add_option("--mode", mode, "so7 or g2")->check(CLI::IsMember({"so7", "g2"}));
  canonical->add_option("--output", output, "write frame and block matrix here");
  canonical->add_option("--format", format, "dec or hex")->check(CLI::IsMember({"dec", "hex"}));
  canonical->add_option("--tol", tolerance, "membership tolerance (relative)");

  auto* classify = app.add_subcommand("classify", "rank and type of a skew matrix");
  classify->add_option("input", input, "skew7 document path or -")->required();

  auto* random = app.add_subcommand("random", "seeded reproducible samples");
  random->add_option("kind", kind, "g2, skew, or assoc-plane")->required();
  random->add_option("--seed", seed, "PRNG seed");
  random->add_option("--count", count, "number of samples");
  random->add_option("--output", output, "output path (default stdout)");
  random->add_option("--format", format, "dec or hex")->check(CLI::IsMember({"dec", "hex"}));

  auto* theta = app.add_subcommand("theta", "so(4) subalgebra of an associative plane");
  theta->add_option("plane", input, "plane3 document path or -")->required();
  theta->add_option("second", second, "optional second plane3 document");

  auto* verify = app.add_subcommand("verify-all", "run the full verification suite");
  verify->add_option("--seed", seed, "PRNG seed");

  CLI11_PARSE(app, argc, argv);

  try {
    const NumberFormat fmt = format == "hex" ? NumberFormat::HexFloat : NumberFormat::Dec17;
    if (identities->parsed()) return cmd_identities(trials, seed, corrupt);
    if (canonical->parsed()) return cmd_canonical(input, mode, output, fmt, tolerance);
    if (classify->parsed()) return cmd_classify(input);
    if (random->parsed()) return cmd_random(kind, seed, count, output, fmt);
    if (theta->parsed()) return cmd_theta(input, second);
    if (verify->parsed()) return cmd_verify_all(seed);
  } catch (const MarginalNumericsError& e) {
    std::fprintf(stderr, "marginal numerics: %s\n", e.what());
    return kExitMarginal;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "precondition failure: %s\n", e.what());
    return kExitPrecondition;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitVerificationFailure;
  }
  return kExitOk;
}
