#include "tormhd/monitor.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "tormhd/norms.hpp"
#include "tormhd/rhs.hpp"

namespace tormhd {

namespace {

const char* const kBase[] = {"energy", "dissipation_integral", "defect", "W", "X", "Y", "Z"};

std::string gronwall_column(const CriterionSpec& s, const char* what) {
  return "gr_" + to_string(s.theorem) + "_" + what;
}

}  // namespace

RunMonitor::RunMonitor(int dim, std::vector<CriterionSpec> specs, std::array<int, 4> permutation)
    : dim_(dim), specs_(std::move(specs)), perm_(permutation) {
  std::array<int, 4> sorted = perm_;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != std::array<int, 4>{0, 1, 2, 3}) throw std::invalid_argument("axis permutation must permute 0..3");
  if (dim_ < 4 && (perm_[0] >= dim_ || perm_[1] >= dim_))
    throw std::invalid_argument("partial axes of the permutation exceed the dimension");

  columns_.push_back("time");
  for (const char* b : kBase) add_column(b);
  const auto add_norm = [this](const std::string& q, double p) {
    const std::string tag = norm_tag(q, p);
    for (const auto& n : norms_)
      if (n.tag == tag) return;
    norms_.push_back({tag, q, p});
    add_column(tag);
  };
  for (const auto& s : specs_) {
    validate_spec(s, dim_);
    if (s.theorem == Theorem::T1_5 || s.theorem == Theorem::CLASSICAL_GRADPI) needs_pressure_ = true;
    const auto q = monitored_quantities(s.theorem);
    for (std::size_t i = 0; i < q.size(); ++i) add_norm(q[i], s.pair_for(i).p);
    for (const auto& c : accumulator_columns(s)) add_column(c);
    if (has_gronwall(s.theorem))
      for (const char* g : {"wy_rhs", "wy_ratio", "xz_rhs", "xz_ratio"}) add_column(gronwall_column(s, g));
  }
  add_norm("grad_u", dim_);
  add_norm("grad_b", dim_);
  add_column("bootstrap");
  add_column("divergence");
  statuses_.resize(specs_.size());
  gronwall_.resize(specs_.size());
}

void RunMonitor::add_column(const std::string& name) {
  if (std::find(columns_.begin(), columns_.end(), name) == columns_.end()) columns_.push_back(name);
}

void RunMonitor::start_ledger(const MhdState& state, const double* rate) {
  ledger_ = energy_ledger_start(state, rate);
  ledger_started_ = true;
}

void RunMonitor::advance_ledger(const MhdState& state, double dt, const double* rate) {
  ledger_ = energy_ledger_update(ledger_, state, dt, rate);
}

double RunMonitor::track(GronwallTrack& g, bool first, double dt, double sup_term, double int_term, double rhs) {
  if (first) {
    g = GronwallTrack{};
    g.initial = sup_term;
  } else {
    g.int_lhs += 0.5 * dt * (g.prev_lhs + int_term);
    g.int_rhs += 0.5 * dt * (g.prev_rhs + rhs);
  }
  g.sup_lhs = std::max(g.sup_lhs, sup_term);
  g.prev_lhs = int_term;
  g.prev_rhs = rhs;
  const double den = g.initial + g.int_rhs;
  return den > 0.0 ? (g.sup_lhs + g.int_lhs) / den : 0.0;
}

const std::vector<double>& RunMonitor::record(const MhdState& state, const SpectralField* pressure) {
  if (state.grid().dim != dim_) throw std::invalid_argument("state dimension does not match the monitor");
  const bool first = series_.empty();
  if (!ledger_started_) start_ledger(state);
  SpectralField own_pressure;
  if (needs_pressure_ && !pressure) {
    own_pressure = pressure_solve(state.u, state.b);
    pressure = &own_pressure;
  }

  std::map<std::string, double> v;
  v["energy"] = ledger_.current_energy;
  v["dissipation_integral"] = ledger_.dissipation_integral;
  v["defect"] = ledger_.defect();
  const Anisotropic a = anisotropic_functionals(state.u, state.b, {perm_[0], perm_[1]});
  v["W"] = a.W;
  v["X"] = a.X;
  v["Y"] = a.Y;
  v["Z"] = a.Z;
  for (const auto& n : norms_) v[n.tag] = quantity_norm(state, n.quantity, n.p, perm_, pressure);
  v["divergence"] = relative_divergence(state);
  const double dt = first ? 1.0 : state.t - series_.times().back();
  series_.append(state.t, v);

  for (std::size_t i = 0; i < specs_.size(); ++i) {
    const auto& s = specs_[i];
    statuses_[i] = monitor_update(statuses_[i], series_, s, dt);
    const auto cols = accumulator_columns(s);
    for (std::size_t j = 0; j < cols.size(); ++j) v[cols[j]] = statuses_[i].accumulators[j];
    if (has_gronwall(s.theorem)) {
      const auto g = gronwall_rhs(state, s, perm_);
      v[gronwall_column(s, "wy_rhs")] = g.at("wy_rhs");
      v[gronwall_column(s, "xz_rhs")] = g.at("xz_rhs");
      v[gronwall_column(s, "wy_ratio")] = track(gronwall_[i][0], first, dt, a.W, a.Y, g.at("wy_rhs"));
      v[gronwall_column(s, "xz_ratio")] = track(gronwall_[i][1], first, dt, a.X, a.Z, g.at("xz_rhs"));
    }
  }
  v["bootstrap"] = bootstrap_trigger(series_, dim_);

  std::vector<double> row;
  row.reserve(columns_.size());
  row.push_back(state.t);
  for (std::size_t c = 1; c < columns_.size(); ++c) row.push_back(v.at(columns_[c]));
  rows_.push_back(std::move(row));
  return rows_.back();
}

void RunMonitor::mark_diverged() {
  for (auto& s : statuses_) s.verdict = Verdict::diverged;
}

}  // namespace tormhd
