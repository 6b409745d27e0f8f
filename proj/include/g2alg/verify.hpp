#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "g2alg/report.hpp"

namespace g2alg {

/// One entry of the full verification suite: a numbered property with the
/// checks that exercise it.
struct CriterionResult {
  int number = 0;
  std::string title;
  IdentityReport report;
  bool pass() const { return report.all_pass(); }
};

/// Runs the complete verification suite with fixed trial counts.  Every
/// check is seeded from `seed` alone, so two invocations with the same seed
/// produce identical reports byte for byte.
std::vector<CriterionResult> run_verification_suite(std::uint64_t seed);

/// Deterministic rendering: one line per check, grouped by criterion, with
/// a trailing summary line per criterion and an overall verdict.
std::string render_suite(const std::vector<CriterionResult>& results);

bool suite_passes(const std::vector<CriterionResult>& results);

}  // namespace g2alg
