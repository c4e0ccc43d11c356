#include "tormhd/series.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace tormhd {

void NormSeries::append(double t, const std::map<std::string, double>& values) {
  if (!times_.empty() && !(t > times_.back()))
    throw std::invalid_argument("series times must be strictly increasing");
  if (tags_.empty() && times_.empty()) {
    for (const auto& [tag, v] : values) tags_.push_back(tag);
  } else {
    if (values.size() != tags_.size()) throw std::invalid_argument("record tag set differs from the series");
    for (const auto& tag : tags_)
      if (!values.count(tag)) throw std::invalid_argument("record is missing tag " + tag);
  }
  times_.push_back(t);
  records_.push_back(values);
}

bool NormSeries::has_tag(const std::string& tag) const {
  return std::find(tags_.begin(), tags_.end(), tag) != tags_.end();
}

double NormSeries::value(const std::string& tag, std::size_t row) const {
  const auto& rec = records_.at(row);
  const auto it = rec.find(tag);
  if (it == rec.end()) throw std::out_of_range("unknown series tag " + tag);
  return it->second;
}

std::string accumulator_key(const std::string& tag, double r) {
  std::ostringstream os;
  os << tag << "^";
  if (std::isinf(r)) os << "inf";
  else os << r;
  return os.str();
}

double accumulate(NormSeries& series, const std::string& tag, double r, double dt, const std::string& key) {
  if (!series.has_tag(tag)) throw std::invalid_argument("unknown series tag " + tag);
  if (!(r >= 1.0)) throw std::invalid_argument("time exponent must be >= 1");
  if (!(dt > 0.0)) throw std::invalid_argument("time step must be positive");
  const std::string name = key.empty() ? accumulator_key(tag, r) : key;
  auto& acc = series.accumulators();
  const std::size_t n = series.size();
  const double now = series.value(tag, n - 1);
  if (std::isinf(r)) {
    const double m = std::fabs(now);
    auto it = acc.find(name);
    if (n == 1 || it == acc.end()) return acc[name] = m;
    return it->second = std::max(it->second, m);
  }
  if (n == 1) return acc[name] = 0.0;
  const double before = series.value(tag, n - 2);
  return acc[name] += 0.5 * dt * (std::pow(std::fabs(before), r) + std::pow(std::fabs(now), r));
}

}  // namespace tormhd
