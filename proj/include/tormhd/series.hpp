#pragma once

#include <map>
#include <string>
#include <vector>

namespace tormhd {

/// Time-stamped records of monitored quantities plus running time integrals.
/// Every record carries the same tag set, fixed by the first append.
class NormSeries {
 public:
  /// Throws unless t exceeds the previous time and the tag set matches.
  void append(double t, const std::map<std::string, double>& values);

  std::size_t size() const noexcept { return times_.size(); }
  bool empty() const noexcept { return times_.empty(); }
  const std::vector<double>& times() const noexcept { return times_; }
  const std::vector<std::string>& tags() const noexcept { return tags_; }
  bool has_tag(const std::string& tag) const;

  /// Value of `tag` in record `row`; throws std::out_of_range for unknown tags.
  double value(const std::string& tag, std::size_t row) const;
  double latest(const std::string& tag) const { return value(tag, size() - 1); }
  const std::map<std::string, double>& record(std::size_t row) const { return records_.at(row); }

  std::map<std::string, double>& accumulators() noexcept { return accumulators_; }
  const std::map<std::string, double>& accumulators() const noexcept { return accumulators_; }

 private:
  std::vector<double> times_;
  std::vector<std::string> tags_;
  std::vector<std::map<std::string, double>> records_;
  std::map<std::string, double> accumulators_;
};

/// Accumulator name for the integral of tag^r (or its running sup at r = inf).
std::string accumulator_key(const std::string& tag, double r);

/// Advances the accumulator of tag^r with the two most recent records:
/// trapezoid over dt for finite r, running sup of the value for r = inf.
/// The first record initializes the accumulator (0, or the value itself for
/// the sup). Throws for unknown tags, r < 1 or dt <= 0.
double accumulate(NormSeries& series, const std::string& tag, double r, double dt,
                  const std::string& key = {});

}  // namespace tormhd
