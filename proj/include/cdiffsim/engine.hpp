#pragma once

#include <functional>
#include <string>
#include <vector>

#include "cdiffsim/cleaning.hpp"
#include "cdiffsim/environment.hpp"
#include "cdiffsim/metrics.hpp"
#include "cdiffsim/model.hpp"

namespace cdiffsim {

struct SimConfig {
  Parameters params;
  bool direct_infection = false;
  CleaningPolicy cleaning;
  std::uint64_t seed = 0;

  int horizon() const { return params.horizon; }
};

struct SimulationState {
  int tick = 0;
  Grid grid;
  std::vector<Patient> patients;  // always sorted by ascending id
  int next_patient_id = 0;
  Rng rng;
  AttributionCounters counters;
  // Successful touch draws by surface kind (shedding + infection passes).
  std::int64_t touches_ht = 0;
  std::int64_t touches_lt = 0;

  int count_in_state(PatientState s) const;
};

// Validates the config, generates the layout and admits the initial patients
// at uniformly random walkable cells.
SimulationState init_state(const SimConfig& config);

// --- Individual tick phases, applied by step() in this order ---

// Phase 1: admits min(admissions_per_tick, capacity - population) patients.
void admit_patients(SimulationState& state, const Parameters& params);

// Phase 2 helper: uniform move to a walkable Moore neighbor; stays put only
// when no neighbor is walkable (cannot happen in the canonical layout).
void move_patient(Patient& patient, const Grid& grid, Rng& rng);
void movement_pass(SimulationState& state);

// Phase 3: every infectious patient standing on a surface draws a touch
// (P_HT / P_LT) and on success adds its shedding rate to the surface.
void shedding_pass(SimulationState& state, const Parameters& params);

// Phase 4: every Resistant/Susceptible patient standing on a surface draws a
// touch and on success becomes Colonized with probability
// min(1, dose_scale * contamination), attributed to the surface kind.
void infection_pass(SimulationState& state, const Parameters& params);

// Phase 5: for each Resistant/Susceptible patient (ascending id), infectious
// patients in its Moore neighborhood (own cell included) are visited in
// uniformly shuffled order; the first successful P_IC / P_ID draw infects and
// is attributed to the source's state.
void direct_contact_infections(SimulationState& state, const Parameters& params);

// Phase 6: runs due cleaning events (high-touch first when both kinds fall on
// the same tick). The executing tick is numbered state.tick + 1.
void cleaning_pass(SimulationState& state, const CleaningPolicy& policy);

// Phase 7: per-patient transition draws; applies state changes, discharges
// and deaths, and advances the in-state timers.
void transition_pass(SimulationState& state, const Parameters& params);

// One full tick: admissions, movement, shedding, infection, optional direct
// contact, cleaning, transitions, tick increment.
void step(SimulationState& state, const SimConfig& config);

// Invoked once after initialization and once after every tick.
using TickObserver = std::function<void(const SimulationState&)>;

ReplicaResult run_replica(const SimConfig& config);
ReplicaResult run_replica(const SimConfig& config, int experiment_id, std::string combo_id,
                          int replica_index, const TickObserver& observer = {});

}  // namespace cdiffsim
