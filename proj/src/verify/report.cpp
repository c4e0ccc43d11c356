#include <algorithm>
#include <cmath>
#include <cstdio>

#include "tormhd/verify.hpp"

namespace tormhd {

double VerificationReport::max() const {
  double m = 0.0;
  for (double v : values) {
    if (std::isnan(v)) return v;
    m = std::max(m, v);
  }
  return m;
}

double VerificationReport::median() const {
  if (values.empty()) return 0.0;
  std::vector<double> s = values;
  std::sort(s.begin(), s.end());
  const std::size_t h = s.size() / 2;
  return s.size() % 2 ? s[h] : 0.5 * (s[h - 1] + s[h]);
}

bool VerificationReport::passed() const {
  if (values.empty()) return false;
  for (double v : values)
    if (!std::isfinite(v) || v < 0.0) return false;
  if (kind == "control") return max() > threshold;
  if (std::isnan(threshold)) return true;
  return max() <= threshold;
}

std::string format_reports(const std::vector<VerificationReport>& reports) {
  std::string out;
  char buf[256];
  for (const auto& r : reports) {
    std::snprintf(buf, sizeof buf, "check: %s\nkind: %s\nn: %zu\nexcluded: %d\nmax: %.6e\nmedian: %.6e\n",
                  r.name.c_str(), r.kind.c_str(), r.n(), r.excluded, r.max(), r.median());
    out += buf;
    if (std::isnan(r.threshold)) out += "threshold: none\n";
    else {
      std::snprintf(buf, sizeof buf, "threshold: %s %.1e\n", r.kind == "control" ? ">" : "<=", r.threshold);
      out += buf;
    }
    out += std::string("result: ") + (r.passed() ? "PASS" : "FAIL") + "\n";
    if (!r.note.empty()) out += "note: " + r.note + "\n";
    out += "\n";
  }
  return out;
}

double relative_residual(double lhs, double rhs, double floor) {
  const double den = std::max({std::fabs(lhs), std::fabs(rhs), floor});
  return den > 0.0 ? std::fabs(lhs - rhs) / den : 0.0;
}

}  // namespace tormhd
