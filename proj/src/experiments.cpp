#include "cdiffsim/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <sstream>
#include <thread>
#include <tuple>
#include <unordered_set>

#include "cdiffsim/csv_io.hpp"
#include "cdiffsim/errors.hpp"

namespace cdiffsim {

namespace {

constexpr int kIntervals[] = {10, 20, 30};
constexpr double kRates[] = {0.5, 0.7, 0.9, 1.0};
constexpr int kRandomCounts[] = {24, 36, 48};

std::string policy_key(const CleaningPolicy& p) {
  std::ostringstream key;
  key << to_string(p.mode);
  if (p.mode == CleaningPolicy::Mode::Random) key << "-n=" << p.count_per_type;
  if (p.mode != CleaningPolicy::Mode::None) {
    key << "-hti=" << p.ht_interval << "-htr=" << format_double(p.ht_rate)
        << "-lti=" << p.lt_interval << "-ltr=" << format_double(p.lt_rate);
  }
  return key.str();
}

std::string combo_key(int experiment_id, bool direct, const CleaningPolicy& policy) {
  std::ostringstream key;
  key << "e" << experiment_id << "-direct=" << (direct ? "true" : "false") << "-"
      << policy_key(policy);
  return key.str();
}

ComboSpec make_combo(int experiment_id, bool direct, CleaningPolicy policy) {
  return ComboSpec{experiment_id, combo_key(experiment_id, direct, policy), direct,
                   policy};
}

}  // namespace

std::vector<ComboSpec> enumerate_combos(int experiment_id) {
  std::vector<ComboSpec> combos;
  switch (experiment_id) {
    case 1:
      combos.push_back(make_combo(1, true, CleaningPolicy::none()));
      combos.push_back(make_combo(1, false, CleaningPolicy::none()));
      break;
    case 2:
      for (int hti : kIntervals)
        for (double htr : kRates)
          for (int lti : kIntervals)
            for (double ltr : kRates)
              combos.push_back(
                  make_combo(2, false, CleaningPolicy::total(hti, htr, lti, ltr)));
      break;
    case 3:
      for (int n : kRandomCounts)
        for (int hti : kIntervals)
          for (double htr : kRates)
            for (int lti : kIntervals)
              for (double ltr : kRates)
                combos.push_back(
                    make_combo(3, false, CleaningPolicy::random(hti, htr, lti, ltr, n)));
      break;
    default:
      throw UnknownExperimentError(experiment_id);
  }
  return combos;
}

std::uint64_t replica_seed(std::uint64_t base_seed, const std::string& combo_id,
                           int replica_index) {
  return (base_seed ^ fnv1a64(combo_id)) + static_cast<std::uint64_t>(replica_index);
}

ExperimentPlan make_plan(int experiment_id, int replicas_per_combo, std::uint64_t base_seed) {
  ExperimentPlan plan{enumerate_combos(experiment_id), replicas_per_combo, base_seed};
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(plan.combos.size() * static_cast<std::size_t>(replicas_per_combo));
  for (const ComboSpec& combo : plan.combos) {
    for (int r = 0; r < replicas_per_combo; ++r) {
      if (!seen.insert(replica_seed(base_seed, combo.combo_id, r)).second) {
        throw SeedCollisionError("seed collision at combo " + combo.combo_id +
                                 ", replica " + std::to_string(r));
      }
    }
  }
  return plan;
}

std::vector<ReplicaResult> run_experiment(const ExperimentPlan& plan, const Parameters& params,
                                          int parallelism) {
  validate_parameters(params);
  const std::size_t replicas = static_cast<std::size_t>(plan.replicas_per_combo);
  const std::size_t total = plan.combos.size() * replicas;
  std::vector<ReplicaResult> results(total);

  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::string first_error;

  auto worker = [&] {
    for (;;) {
      const std::size_t task = next.fetch_add(1);
      if (task >= total) return;
      const ComboSpec& combo = plan.combos[task / replicas];
      const int replica_index = static_cast<int>(task % replicas);
      SimConfig config{params, combo.direct_infection, combo.cleaning,
                       replica_seed(plan.base_seed, combo.combo_id, replica_index)};
      try {
        results[task] = run_replica(config, combo.experiment_id, combo.combo_id,
                                    replica_index);
      } catch (const std::exception& err) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (first_error.empty()) {
          first_error = "replica failed (combo " + combo.combo_id + ", seed " +
                        std::to_string(config.seed) + "): " + err.what();
        }
        next.store(total);  // drain remaining tasks
        return;
      }
    }
  };

  const int workers = std::max(1, parallelism);
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers - 1));
  for (int i = 1; i < workers; ++i) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();

  if (!first_error.empty()) throw std::runtime_error(first_error);

  std::sort(results.begin(), results.end(),
            [](const ReplicaResult& a, const ReplicaResult& b) {
              return std::tie(a.experiment_id, a.combo_id, a.replica_index) <
                     std::tie(b.experiment_id, b.combo_id, b.replica_index);
            });
  return results;
}

}  // namespace cdiffsim
