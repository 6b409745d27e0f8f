#pragma once

#include <string>
#include <vector>

namespace g2alg {

/// One verified statement: which identity it exercises, how hard it was
/// pushed, and how far off the computation landed.
struct Check {
  std::string name;    ///< short machine-friendly identifier
  std::string anchor;  ///< the algebraic statement being checked, human readable
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  long count = 0;      ///< tuples / trials exercised
  std::string detail;  ///< optional witness or note

  static Check make(std::string name, std::string anchor, double residual, double tolerance,
                    long count = 0, std::string detail = {}) {
    Check c;
    c.name = std::move(name);
    c.anchor = std::move(anchor);
    c.residual = residual;
    c.tolerance = tolerance;
    c.pass = residual <= tolerance;
    c.count = count;
    c.detail = std::move(detail);
    return c;
  }

  /// For checks whose pass condition is not "residual below tolerance"
  /// (e.g. a value that must stay *above* a floor).
  static Check make_flag(std::string name, std::string anchor, bool pass, double residual = 0.0,
                         double tolerance = 0.0, long count = 0, std::string detail = {}) {
    Check c;
    c.name = std::move(name);
    c.anchor = std::move(anchor);
    c.residual = residual;
    c.tolerance = tolerance;
    c.pass = pass;
    c.count = count;
    c.detail = std::move(detail);
    return c;
  }
};

struct IdentityReport {
  std::vector<Check> checks;

  void add(Check c) { checks.push_back(std::move(c)); }
  void append(const IdentityReport& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
  }

  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }

  double max_residual() const {
    double r = 0.0;
    for (const auto& c : checks) r = std::max(r, c.residual);
    return r;
  }
};

/// Render a report as fixed-layout text, one line per check.  The output is
/// deterministic: no timing or environment data ever appears here.
std::string render_report(const IdentityReport& report);

}  // namespace g2alg
