#include "g2alg/report.hpp"

#include <algorithm>
#include <cstdio>

namespace g2alg {

std::string render_report(const IdentityReport& report) {
  std::string out;
  char line[512];
  for (const auto& c : report.checks) {
    std::snprintf(line, sizeof line, "%-28s  %-70s  residual %.3e  tol %.3e  n=%-8ld %s%s%s\n",
                  c.name.c_str(), c.anchor.c_str(), c.residual, c.tolerance, c.count,
                  c.pass ? "PASS" : "FAIL", c.detail.empty() ? "" : "  ",
                  c.detail.c_str());
    out += line;
  }
  return out;
}

}  // namespace g2alg
