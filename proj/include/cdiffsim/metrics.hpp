#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cdiffsim/cleaning.hpp"

namespace cdiffsim {

enum class InfectionSource { HighTouch, LowTouch, ColonizedPatient, DiseasedPatient };

// Per-replica attribution and flow counts. All counts are monotone
// nondecreasing over a run.
struct AttributionCounters {
  std::int64_t infected_by_ht = 0;
  std::int64_t infected_by_lt = 0;
  std::int64_t infected_by_colonized = 0;
  std::int64_t infected_by_diseased = 0;
  // S->C / S->D via the spontaneous transition probabilities; excluded from
  // the four-way attribution shares.
  std::int64_t spontaneous_colonizations = 0;
  std::int64_t admissions = 0;
  std::int64_t discharges = 0;
  std::int64_t deaths = 0;

  std::int64_t total_contact_infections() const {
    return infected_by_ht + infected_by_lt + infected_by_colonized + infected_by_diseased;
  }

  friend bool operator==(const AttributionCounters&, const AttributionCounters&) = default;
};

void record_infection(AttributionCounters& counters, InfectionSource source);

struct Shares {
  double high_touch = 0.0;
  double low_touch = 0.0;
  double colonized = 0.0;
  double diseased = 0.0;
};

// Each attribution counter divided by their sum; nullopt when no contact
// infection has been recorded.
std::optional<Shares> shares(const AttributionCounters& counters);

struct ReplicaResult {
  int experiment_id = 0;
  std::string combo_id;
  int replica_index = 0;
  std::uint64_t seed = 0;
  bool direct_infection = false;
  CleaningPolicy cleaning;
  int horizon = 0;
  AttributionCounters counters;

  friend bool operator==(const ReplicaResult&, const ReplicaResult&) = default;
};

struct SummaryStats {
  int n = 0;
  double mean = 0.0;
  double std_dev = 0.0;
  double min = 0.0;
  double q1 = 0.0;
  double median = 0.0;
  double q3 = 0.0;
  double max = 0.0;
};

// Descriptive statistics with interpolated quartiles (midpoint convention
// for even n) and sample standard deviation. Throws EmptyGroupError on an
// empty input. Permutation-invariant.
SummaryStats summarize(std::span<const double> values);

SummaryStats summarize_group(std::span<const ReplicaResult> results,
                             const std::function<double(const ReplicaResult&)>& metric);

}  // namespace cdiffsim
