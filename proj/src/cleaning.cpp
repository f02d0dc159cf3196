#include "cdiffsim/cleaning.hpp"

#include <string>

#include "cdiffsim/errors.hpp"

namespace cdiffsim {

std::string_view to_string(CleaningPolicy::Mode mode) {
  switch (mode) {
    case CleaningPolicy::Mode::None: return "none";
    case CleaningPolicy::Mode::Total: return "total";
    case CleaningPolicy::Mode::Random: return "random";
  }
  return "?";
}

void CleaningPolicy::validate() const {
  if (mode == Mode::None) return;
  if (ht_interval < 1) {
    throw ValidationError(ValidationCode::NegativeValue, "ht_interval",
                          "high-touch cleaning interval must be >= 1 tick");
  }
  if (lt_interval < 1) {
    throw ValidationError(ValidationCode::NegativeValue, "lt_interval",
                          "low-touch cleaning interval must be >= 1 tick");
  }
  if (!(ht_rate >= 0.0 && ht_rate <= 1.0)) {
    throw ValidationError(ValidationCode::ProbabilityOutOfRange, "ht_rate",
                          "high-touch disinfection rate must lie in [0, 1]");
  }
  if (!(lt_rate >= 0.0 && lt_rate <= 1.0)) {
    throw ValidationError(ValidationCode::ProbabilityOutOfRange, "lt_rate",
                          "low-touch disinfection rate must lie in [0, 1]");
  }
  if (mode == Mode::Random &&
      (count_per_type < 0 || count_per_type > Grid::kSurfacesPerKind)) {
    throw ValidationError(ValidationCode::NegativeValue, "count_per_type",
                          "random cleaning count must lie in [0, " +
                              std::to_string(Grid::kSurfacesPerKind) + "]");
  }
}

bool cleaning_due(const CleaningPolicy& policy, int tick, SurfaceKind kind) {
  if (policy.mode == CleaningPolicy::Mode::None) return false;
  return tick % policy.interval(kind) == 0;
}

std::vector<int> select_targets(const CleaningPolicy& policy, const Grid& grid, SurfaceKind kind,
                                Rng& rng) {
  std::vector<int> of_kind;
  of_kind.reserve(Grid::kSurfacesPerKind);
  const auto& surfaces = grid.surfaces();
  for (int i = 0; i < static_cast<int>(surfaces.size()); ++i) {
    if (surfaces[static_cast<std::size_t>(i)].kind == kind) of_kind.push_back(i);
  }
  if (policy.mode == CleaningPolicy::Mode::Total) return of_kind;

  // Random mode: fresh sample without replacement at every event.
  const auto count = static_cast<std::size_t>(policy.count_per_type);
  for (std::size_t i = 0; i < count && i < of_kind.size(); ++i) {
    const std::size_t j =
        i + rng.next_below(static_cast<std::uint32_t>(of_kind.size() - i));
    std::swap(of_kind[i], of_kind[j]);
  }
  of_kind.resize(std::min(count, of_kind.size()));
  return of_kind;
}

void apply_cleaning(Surface& surface, double rate) {
  surface.contamination *= (1.0 - rate);
}

}  // namespace cdiffsim
