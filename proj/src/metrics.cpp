#include "cdiffsim/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "cdiffsim/errors.hpp"

namespace cdiffsim {

void record_infection(AttributionCounters& counters, InfectionSource source) {
  switch (source) {
    case InfectionSource::HighTouch: ++counters.infected_by_ht; break;
    case InfectionSource::LowTouch: ++counters.infected_by_lt; break;
    case InfectionSource::ColonizedPatient: ++counters.infected_by_colonized; break;
    case InfectionSource::DiseasedPatient: ++counters.infected_by_diseased; break;
  }
}

std::optional<Shares> shares(const AttributionCounters& counters) {
  const double total = static_cast<double>(counters.total_contact_infections());
  if (total <= 0.0) return std::nullopt;
  return Shares{
      static_cast<double>(counters.infected_by_ht) / total,
      static_cast<double>(counters.infected_by_lt) / total,
      static_cast<double>(counters.infected_by_colonized) / total,
      static_cast<double>(counters.infected_by_diseased) / total,
  };
}

namespace {

// Linear interpolation between order statistics; for even n the median is
// the midpoint of the two central values.
double quantile(const std::vector<double>& sorted, double q) {
  const std::size_t n = sorted.size();
  const double h = static_cast<double>(n - 1) * q;
  const auto lo = static_cast<std::size_t>(h);
  if (lo + 1 >= n) return sorted[n - 1];
  const double frac = h - static_cast<double>(lo);
  return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

}  // namespace

SummaryStats summarize(std::span<const double> values) {
  if (values.empty()) throw EmptyGroupError();
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());

  const auto n = static_cast<double>(sorted.size());
  const double mean = std::accumulate(sorted.begin(), sorted.end(), 0.0) / n;
  double ss = 0.0;
  for (double v : sorted) ss += (v - mean) * (v - mean);
  const double std_dev = sorted.size() < 2 ? 0.0 : std::sqrt(ss / (n - 1.0));

  return SummaryStats{
      static_cast<int>(sorted.size()),
      mean,
      std_dev,
      sorted.front(),
      quantile(sorted, 0.25),
      quantile(sorted, 0.5),
      quantile(sorted, 0.75),
      sorted.back(),
  };
}

SummaryStats summarize_group(std::span<const ReplicaResult> results,
                             const std::function<double(const ReplicaResult&)>& metric) {
  std::vector<double> values;
  values.reserve(results.size());
  for (const ReplicaResult& r : results) values.push_back(metric(r));
  return summarize(values);
}

}  // namespace cdiffsim
