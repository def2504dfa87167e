#include "mgslab/norm_series.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>

#include "mgslab/error.hpp"

namespace mgslab {

void NormSeries::append(const NormSample& s) {
  if (!samples_.empty() && !(s.t > samples_.back().t)) {
    throw InvalidArgument("NormSeries times must be strictly increasing");
  }
  if (s.l2 < 0.0 || s.hs < 0.0 || s.hs_plus_gamma < 0.0 || s.support_leak < 0.0) {
    throw InvalidArgument("NormSeries norms must be nonnegative");
  }
  samples_.push_back(s);
}

std::vector<double> NormSeries::times() const {
  std::vector<double> v;
  v.reserve(samples_.size());
  for (const auto& s : samples_) v.push_back(s.t);
  return v;
}

std::vector<double> NormSeries::l2() const {
  std::vector<double> v;
  v.reserve(samples_.size());
  for (const auto& s : samples_) v.push_back(s.l2);
  return v;
}

std::vector<double> NormSeries::hs() const {
  std::vector<double> v;
  v.reserve(samples_.size());
  for (const auto& s : samples_) v.push_back(s.hs);
  return v;
}

double NormSeries::max_support_leak() const {
  double m = 0.0;
  for (const auto& s : samples_) m = std::max(m, s.support_leak);
  return m;
}

bool NormSeries::all_resolved() const {
  return std::all_of(samples_.begin(), samples_.end(), [](const auto& s) { return s.resolved; });
}

void NormSeries::write_csv(std::ostream& os) const {
  os << "t,l2,hs,hs_plus_gamma,support_leak,resolved\n";
  os << std::setprecision(17);
  for (const auto& s : samples_) {
    os << s.t << ',' << s.l2 << ',' << s.hs << ',' << s.hs_plus_gamma << ',' << s.support_leak
       << ',' << (s.resolved ? 1 : 0) << '\n';
  }
}

void NormSeries::write_csv(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw Error("cannot open " + path + " for writing");
  write_csv(out);
}

} // namespace mgslab
