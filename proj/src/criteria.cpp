#include "tormhd/criteria.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "tormhd/error.hpp"
#include "tormhd/multiplier.hpp"
#include "tormhd/norms.hpp"

namespace tormhd {

namespace {

constexpr double kTol = 1e-12;

double inv(double v) { return std::isinf(v) ? 0.0 : 1.0 / v; }

bool le(double a, double b) { return a <= b + kTol; }
bool lt(double a, double b) { return a < b - kTol; }
bool near(double a, double b) { return std::fabs(a - b) <= kTol; }

bool is_t11(Theorem t) { return t == Theorem::T1_1 || t == Theorem::T1_3; }
bool is_t12(Theorem t) { return t == Theorem::T1_2 || t == Theorem::T1_4; }

// Logical axis index (1-based) of a quantity such as "u3" or "grad_u4".
int logical_axis(const std::string& q, std::size_t pos) {
  if (pos >= q.size()) throw std::invalid_argument("quantity " + q + " lacks an axis index");
  const int a = q[pos] - '0';
  if (a < 1 || a > kMaxDim) throw std::invalid_argument("quantity " + q + " has an invalid axis index");
  return a;
}

// Smallness exponent of the endpoint clause: sup ||u_i||^3_{L^6} for
// T1_1/T1_3 and sup ||grad u_i||^6_{L^{12/5}} for T1_2/T1_4.
double smallness_power(Theorem t) { return is_t11(t) ? 3.0 : 6.0; }

}  // namespace

std::string to_string(Theorem t) {
  switch (t) {
    case Theorem::T1_1: return "T1_1";
    case Theorem::T1_2: return "T1_2";
    case Theorem::T1_3: return "T1_3";
    case Theorem::T1_4: return "T1_4";
    case Theorem::T1_5: return "T1_5";
    case Theorem::CLASSICAL_U: return "CLASSICAL_U";
    case Theorem::CLASSICAL_GRADU: return "CLASSICAL_GRADU";
    case Theorem::CLASSICAL_GRADPI: return "CLASSICAL_GRADPI";
  }
  return "?";
}

Theorem parse_theorem(const std::string& name) {
  for (Theorem t : {Theorem::T1_1, Theorem::T1_2, Theorem::T1_3, Theorem::T1_4, Theorem::T1_5,
                    Theorem::CLASSICAL_U, Theorem::CLASSICAL_GRADU, Theorem::CLASSICAL_GRADPI})
    if (to_string(t) == name) return t;
  throw std::invalid_argument("unknown theorem " + name);
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::tracking: return "tracking";
    case Verdict::accumulator_finite: return "accumulator_finite";
    case Verdict::diverged: return "diverged";
  }
  return "?";
}

ExponentPair CriterionSpec::pair_for(std::size_t quantity) const {
  if (pairs.empty()) throw std::invalid_argument("criterion spec has no exponent pairs");
  return pairs.size() == 1 ? pairs.front() : pairs.at(quantity);
}

std::vector<std::string> monitored_quantities(Theorem t) {
  switch (t) {
    case Theorem::T1_1: return {"u3", "u4"};
    case Theorem::T1_2: return {"grad_u3", "grad_u4"};
    case Theorem::T1_3: return {"u3", "u4", "b"};
    case Theorem::T1_4: return {"grad_u3", "grad_u4", "grad_b"};
    case Theorem::T1_5: return {"d3pi", "d4pi"};
    case Theorem::CLASSICAL_U: return {"u"};
    case Theorem::CLASSICAL_GRADU: return {"grad_u"};
    case Theorem::CLASSICAL_GRADPI: return {"grad_pi"};
  }
  return {};
}

bool admissible(Theorem t, double p, double r, bool smallness, int dim) {
  if (!(p >= 1.0) || !(r >= 1.0)) throw std::invalid_argument("exponents must be >= 1");
  const double ip = inv(p);
  const double ir = inv(r);
  const double lhs = 4.0 * ip + 2.0 * ir;
  const double n = dim;
  if (smallness) {
    if (!std::isinf(r)) return false;
    if (is_t11(t)) return near(p, 6.0);
    if (is_t12(t)) return near(p, 12.0 / 5.0);
    return false;
  }
  switch (t) {
    case Theorem::T1_1:
    case Theorem::T1_3:
      return p > 6.0 + kTol && le(lhs, ip + 0.5);
    case Theorem::T1_2:
    case Theorem::T1_4:
      if (p > 12.0 / 5.0 + kTol && p <= 4.0) return le(lhs, 1.25 + ip);
      if (p > 4.0) return le(lhs, 1.0 + 2.0 * ip);
      return false;
    case Theorem::T1_5:
      return p > 12.0 / 7.0 + kTol && p < 6.0 - kTol && lt(lhs, 8.0 / 3.0);
    case Theorem::CLASSICAL_U:
      return p > n + kTol && le(n * ip + 2.0 * ir, 1.0);
    case Theorem::CLASSICAL_GRADU:
      return dim >= 3 && near(n * ip + 2.0 * ir, 2.0) && r > 1.0 + kTol &&
             le(r, std::min(2.0, n / (n - 2.0)));
    case Theorem::CLASSICAL_GRADPI:
      return (dim == 3 || dim == 4) && p >= n / 3.0 - kTol && le(n * ip + 2.0 * ir, 3.0);
  }
  return false;
}

void validate_spec(const CriterionSpec& spec, int dim) {
  const auto q = monitored_quantities(spec.theorem);
  if (spec.pairs.empty() || (spec.pairs.size() != 1 && spec.pairs.size() != q.size()))
    throw std::invalid_argument(to_string(spec.theorem) + " needs 1 or " + std::to_string(q.size()) +
                                " exponent pairs");
  for (std::size_t i = 0; i < q.size(); ++i) {
    const ExponentPair pr = spec.pair_for(i);
    if (!admissible(spec.theorem, pr.p, pr.r, spec.smallness, dim))
      throw std::invalid_argument("(p, r) = (" + format_exponent(pr.p) + ", " + format_exponent(pr.r) +
                                  ") is not admissible for " + to_string(spec.theorem) +
                                  (spec.smallness ? " in smallness mode" : ""));
  }
  const bool needs_4d = spec.theorem != Theorem::CLASSICAL_U && spec.theorem != Theorem::CLASSICAL_GRADU &&
                        spec.theorem != Theorem::CLASSICAL_GRADPI;
  if (needs_4d && dim != 4) throw std::invalid_argument(to_string(spec.theorem) + " is stated on the 4-torus");
}

std::string format_exponent(double v) {
  if (std::isinf(v)) return "inf";
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

std::string norm_tag(const std::string& quantity, double p) { return "L" + format_exponent(p) + "_" + quantity; }

double quantity_norm(const MhdState& state, const std::string& q, double p, const std::array<int, 4>& perm,
                     const SpectralField* pressure) {
  const auto axis = [&](int logical) {
    const int a = perm[static_cast<std::size_t>(logical - 1)];
    if (a >= state.grid().dim) throw std::invalid_argument("quantity " + q + " needs a higher dimension");
    return a;
  };
  const auto need_pressure = [&]() -> const SpectralField& {
    if (!pressure) throw std::invalid_argument("quantity " + q + " needs the pressure");
    return *pressure;
  };
  if (q == "u") return lp_norm(state.u, p);
  if (q == "b") return lp_norm(state.b, p);
  if (q == "grad_u") return lp_norm(jacobian(state.u), p);
  if (q == "grad_b") return lp_norm(jacobian(state.b), p);
  if (q == "grad_pi") return lp_norm(gradient(need_pressure()), p);
  if (q.rfind("grad_u", 0) == 0) return lp_norm(jacobian(state.u.extract(axis(logical_axis(q, 6)))), p);
  if (q.size() == 2 && q[0] == 'u') return lp_norm(state.u.extract(axis(logical_axis(q, 1))), p);
  if (q.size() == 4 && q[0] == 'd' && q.substr(2) == "pi")
    return lp_norm(derivative(need_pressure(), axis(logical_axis(q, 1))), p);
  throw std::invalid_argument("unknown monitored quantity " + q);
}

std::vector<std::string> accumulator_columns(const CriterionSpec& spec) {
  std::vector<std::string> cols;
  const auto q = monitored_quantities(spec.theorem);
  for (std::size_t i = 0; i < q.size(); ++i) {
    const ExponentPair pr = spec.pair_for(i);
    const bool sup = spec.smallness || std::isinf(pr.r);
    cols.push_back((sup ? "sup_" : "acc_") + to_string(spec.theorem) + "_" + q[i]);
  }
  return cols;
}

MonitorStatus monitor_update(const MonitorStatus& status, NormSeries& series, const CriterionSpec& spec, double dt) {
  const auto q = monitored_quantities(spec.theorem);
  const auto cols = accumulator_columns(spec);
  MonitorStatus out = status;
  out.accumulators.resize(q.size(), 0.0);
  out.smallness_sups.resize(q.size(), 0.0);
  out.finite = true;
  for (std::size_t i = 0; i < q.size(); ++i) {
    const ExponentPair pr = spec.pair_for(i);
    const std::string tag = norm_tag(q[i], pr.p);
    if (!series.has_tag(tag)) throw ConfigError("criteria." + to_string(spec.theorem), "series lacks tag " + tag);
    const double r = spec.smallness ? kInf : pr.r;
    out.accumulators[i] = accumulate(series, tag, r, dt, cols[i]);
    if (spec.smallness)
      out.smallness_sups[i] = std::max(out.smallness_sups[i], std::pow(series.latest(tag), smallness_power(spec.theorem)));
    if (!std::isfinite(out.accumulators[i])) out.finite = false;
  }
  out.smallness_value = 0.0;
  for (double s : out.smallness_sups) out.smallness_value += s;
  if (out.verdict != Verdict::diverged) out.verdict = out.finite ? Verdict::accumulator_finite : Verdict::tracking;
  return out;
}

double bootstrap_trigger(const NormSeries& series, int dim) {
  const std::string tu = norm_tag("grad_u", dim);
  const std::string tb = norm_tag("grad_b", dim);
  if (!series.has_tag(tu) || !series.has_tag(tb))
    throw std::invalid_argument("series lacks " + tu + " or " + tb);
  double acc = 0.0;
  const auto& t = series.times();
  for (std::size_t i = 1; i < series.size(); ++i) {
    const auto f = [&](std::size_t row) {
      const double a = series.value(tu, row);
      const double b = series.value(tb, row);
      return a * a + b * b;
    };
    acc += 0.5 * (t[i] - t[i - 1]) * (f(i - 1) + f(i));
  }
  return acc;
}

bool has_gronwall(Theorem t) { return is_t11(t) || is_t12(t); }

std::map<std::string, double> gronwall_rhs(const MhdState& state, const CriterionSpec& spec,
                                           const std::array<int, 4>& perm) {
  if (!has_gronwall(spec.theorem))
    throw std::invalid_argument(to_string(spec.theorem) + " has no Gronwall functional");
  if (state.grid().dim != 4) throw std::invalid_argument("Gronwall functionals are stated on the 4-torus");
  const auto fx = anisotropic_functionals(state.u, state.b, {perm[0], perm[1]});
  std::map<std::string, double> out{{"W", fx.W}, {"X", fx.X}, {"Y", fx.Y}, {"Z", fx.Z}};
  const auto q = monitored_quantities(spec.theorem);
  double wy = 0.0;
  double xz = std::sqrt(fx.W * fx.Y * fx.Z);
  for (std::size_t i = 0; i < q.size(); ++i) {
    const double p = spec.pair_for(i).p;
    const double n = quantity_norm(state, q[i], p, perm);
    double a = 0.0;
    double b = 0.0;
    if (is_t11(spec.theorem)) {
      if (p < 6.0 - kTol) throw std::invalid_argument("Gronwall functional needs p >= 6");
      if (std::isinf(p)) {
        a = n * n * fx.X;
        b = n * n * fx.X;
      } else {
        a = std::pow(n, 2.0 * p / (p - 2.0)) * std::pow(fx.X, (p - 4.0) / (p - 2.0)) * std::pow(fx.Z, 2.0 / (p - 2.0));
        b = std::pow(n, 2.0 * p / (p - 4.0)) * fx.X;
      }
    } else {
      if (p < 12.0 / 5.0 - kTol) throw std::invalid_argument("Gronwall functional needs p >= 12/5");
      if (std::isinf(p)) {
        a = n * fx.X;
        b = n * fx.X;
      } else {
        if (p <= 4.0)
          a = std::pow(n, 4.0 * p / (3.0 * p - 4.0)) * std::pow(fx.X, 4.0 * (p - 2.0) / (3.0 * p - 4.0)) *
              std::pow(fx.Z, (4.0 - p) / (3.0 * p - 4.0));
        else
          a = std::pow(n, p / (p - 2.0)) * fx.X;
        b = std::pow(n, p / (p - 2.0)) * fx.X;
      }
    }
    out["wy_rhs_" + q[i]] = a;
    out["xz_rhs_" + q[i]] = b;
    wy += a;
    xz += b;
  }
  out["wy_rhs"] = wy;
  out["xz_rhs"] = xz;
  return out;
}

}  // namespace tormhd
