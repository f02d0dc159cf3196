#pragma once

#include <string_view>
#include <vector>

#include "cdiffsim/environment.hpp"
#include "cdiffsim/rng.hpp"

namespace cdiffsim {

// Cleaning plan for the ward. Total cleans every surface of a kind when its
// interval elapses; Random cleans count_per_type surfaces of the kind, drawn
// fresh (without replacement) at every cleaning event.
struct CleaningPolicy {
  enum class Mode { None, Total, Random };

  Mode mode = Mode::None;
  int ht_interval = 0;
  double ht_rate = 0.0;
  int lt_interval = 0;
  double lt_rate = 0.0;
  int count_per_type = 0;  // Random mode only

  static CleaningPolicy none() { return {}; }
  static CleaningPolicy total(int ht_interval, double ht_rate, int lt_interval, double lt_rate) {
    return {Mode::Total, ht_interval, ht_rate, lt_interval, lt_rate, 0};
  }
  static CleaningPolicy random(int ht_interval, double ht_rate, int lt_interval, double lt_rate,
                               int count_per_type) {
    return {Mode::Random, ht_interval, ht_rate, lt_interval, lt_rate, count_per_type};
  }

  int interval(SurfaceKind kind) const {
    return kind == SurfaceKind::HighTouch ? ht_interval : lt_interval;
  }
  double rate(SurfaceKind kind) const {
    return kind == SurfaceKind::HighTouch ? ht_rate : lt_rate;
  }

  // Throws ValidationError: intervals >= 1, rates in [0,1], count in [0,72]
  // (checked only for the fields the mode uses).
  void validate() const;

  friend bool operator==(const CleaningPolicy&, const CleaningPolicy&) = default;
};

std::string_view to_string(CleaningPolicy::Mode mode);

// True when a cleaning event for this surface kind falls on this tick
// (1-based tick number, multiples of the kind's interval). None never fires.
bool cleaning_due(const CleaningPolicy& policy, int tick, SurfaceKind kind);

// Indices into grid.surfaces() targeted by one cleaning event for the kind.
// Total selects all 72; Random samples count_per_type distinct surfaces.
std::vector<int> select_targets(const CleaningPolicy& policy, const Grid& grid, SurfaceKind kind,
                                Rng& rng);

// contamination' = contamination * (1 - rate)
void apply_cleaning(Surface& surface, double rate);

}  // namespace cdiffsim
