#pragma once

#include <string>
#include <vector>

#include "cdiffsim/engine.hpp"

namespace cdiffsim {

// One factorial combination: experiment id, stable combo key and the
// simulation flags it fixes.
struct ComboSpec {
  int experiment_id = 0;
  std::string combo_id;
  bool direct_infection = false;
  CleaningPolicy cleaning;

  friend bool operator==(const ComboSpec&, const ComboSpec&) = default;
};

// Experiment 1: direct infection on/off, no cleaning (2 combos).
// Experiment 2: Total cleaning, 3x4x3x4 interval/rate grid (144 combos).
// Experiment 3: Random cleaning, counts {24,36,48} x the same grid (432).
// Throws UnknownExperimentError for any other id.
std::vector<ComboSpec> enumerate_combos(int experiment_id);

struct ExperimentPlan {
  std::vector<ComboSpec> combos;
  int replicas_per_combo = 150;
  std::uint64_t base_seed = 0;
};

// base_seed XOR fnv1a64(combo_id), plus the replica index.
std::uint64_t replica_seed(std::uint64_t base_seed, const std::string& combo_id,
                           int replica_index);

// Builds the plan and verifies exhaustively that no two (combo, replica)
// pairs share a seed; throws SeedCollisionError otherwise.
ExperimentPlan make_plan(int experiment_id, int replicas_per_combo, std::uint64_t base_seed);

// Runs every (combo, replica) pair on a pool of `parallelism` workers.
// Results are sorted by (experiment_id, combo_id, replica_index) and are
// identical regardless of parallelism. A failed replica aborts the batch
// with its combo and seed identified.
std::vector<ReplicaResult> run_experiment(const ExperimentPlan& plan, const Parameters& params,
                                          int parallelism);

}  // namespace cdiffsim
