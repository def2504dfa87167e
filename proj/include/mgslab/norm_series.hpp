#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mgslab {

struct NormSample {
  double t = 0.0;
  double l2 = 0.0;
  double hs = 0.0;
  double hs_plus_gamma = 0.0;
  double support_leak = 0.0;
  bool resolved = true;
};

/// Diagnostics recorded along a run. Times are strictly increasing.
class NormSeries {
public:
  /// Throws InvalidArgument if t does not exceed the last recorded time or a
  /// norm is negative.
  void append(const NormSample& sample);

  const std::vector<NormSample>& samples() const noexcept { return samples_; }
  std::size_t size() const noexcept { return samples_.size(); }
  bool empty() const noexcept { return samples_.empty(); }
  const NormSample& back() const { return samples_.back(); }
  const NormSample& operator[](std::size_t i) const { return samples_[i]; }

  std::vector<double> times() const;
  std::vector<double> l2() const;
  std::vector<double> hs() const;

  double max_support_leak() const;
  bool all_resolved() const;

  /// Header `t,l2,hs,hs_plus_gamma,support_leak,resolved`, one row per sample.
  void write_csv(std::ostream& os) const;
  void write_csv(const std::string& path) const;

private:
  std::vector<NormSample> samples_;
};

} // namespace mgslab
