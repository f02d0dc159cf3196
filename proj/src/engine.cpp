#include "cdiffsim/engine.hpp"

#include <algorithm>
#include <cstdlib>
#include <utility>

namespace cdiffsim {

int SimulationState::count_in_state(PatientState s) const {
  return static_cast<int>(
      std::count_if(patients.begin(), patients.end(),
                    [s](const Patient& p) { return p.state == s; }));
}

namespace {

void admit(SimulationState& state, const Parameters& params, int count) {
  const auto& cells = state.grid.walkable_cells();
  for (int i = 0; i < count; ++i) {
    Patient p;
    p.id = state.next_patient_id++;
    p.state = sample_admission_state(params, state.rng.next_double());
    p.ticks_in_state = 0;
    p.position = cells[state.rng.next_below(static_cast<std::uint32_t>(cells.size()))];
    state.patients.push_back(p);
    ++state.counters.admissions;
  }
}

}  // namespace

SimulationState init_state(const SimConfig& config) {
  validate_parameters(config.params);
  config.cleaning.validate();
  SimulationState state;
  state.grid = generate_layout();
  state.rng = Rng(config.seed);
  admit(state, config.params,
        std::min(config.params.initial_patients, config.params.capacity));
  return state;
}

void admit_patients(SimulationState& state, const Parameters& params) {
  const int room = params.capacity - static_cast<int>(state.patients.size());
  admit(state, params, std::clamp(params.admissions_per_tick, 0, std::max(0, room)));
}

void move_patient(Patient& patient, const Grid& grid, Rng& rng) {
  std::array<Cell, 8> buf{};
  const int n = grid.walkable_neighbors(patient.position, buf);
  if (n == 0) return;
  patient.position = buf[rng.next_below(static_cast<std::uint32_t>(n))];
}

void movement_pass(SimulationState& state) {
  for (Patient& p : state.patients) move_patient(p, state.grid, state.rng);
}

void shedding_pass(SimulationState& state, const Parameters& params) {
  for (const Patient& p : state.patients) {
    if (!is_infectious(p.state)) continue;
    Surface* surface = state.grid.surface_at(p.position);
    if (surface == nullptr) continue;
    const bool high = surface->kind == SurfaceKind::HighTouch;
    if (!state.rng.bernoulli(high ? params.P_HT : params.P_LT)) continue;
    ++(high ? state.touches_ht : state.touches_lt);
    surface->contamination +=
        p.state == PatientState::Colonized ? params.shed_C : params.shed_D;
  }
}

void infection_pass(SimulationState& state, const Parameters& params) {
  for (Patient& p : state.patients) {
    if (is_infectious(p.state)) continue;
    const Surface* surface = state.grid.surface_at(p.position);
    if (surface == nullptr) continue;
    const bool high = surface->kind == SurfaceKind::HighTouch;
    if (!state.rng.bernoulli(high ? params.P_HT : params.P_LT)) continue;
    ++(high ? state.touches_ht : state.touches_lt);
    const double p_infect = std::min(1.0, params.dose_scale * surface->contamination);
    if (!state.rng.bernoulli(p_infect)) continue;
    p.state = PatientState::Colonized;
    p.ticks_in_state = 0;
    record_infection(state.counters,
                     high ? InfectionSource::HighTouch : InfectionSource::LowTouch);
  }
}

void direct_contact_infections(SimulationState& state, const Parameters& params) {
  std::vector<int> sources;
  for (std::size_t i = 0; i < state.patients.size(); ++i) {
    Patient& target = state.patients[i];
    if (is_infectious(target.state)) continue;

    // Infectious patients in the Moore neighborhood, own cell included.
    // A patient colonized earlier in this pass is a valid source.
    sources.clear();
    for (std::size_t j = 0; j < state.patients.size(); ++j) {
      if (j == i) continue;
      const Patient& other = state.patients[j];
      if (!is_infectious(other.state)) continue;
      if (std::abs(other.position.row - target.position.row) <= 1 &&
          std::abs(other.position.col - target.position.col) <= 1) {
        sources.push_back(static_cast<int>(j));
      }
    }
    state.rng.shuffle(sources);
    for (int j : sources) {
      const PatientState source_state = state.patients[static_cast<std::size_t>(j)].state;
      const double p_infect =
          source_state == PatientState::Colonized ? params.P_IC : params.P_ID;
      if (!state.rng.bernoulli(p_infect)) continue;
      target.state = PatientState::Colonized;
      target.ticks_in_state = 0;
      record_infection(state.counters, source_state == PatientState::Colonized
                                           ? InfectionSource::ColonizedPatient
                                           : InfectionSource::DiseasedPatient);
      break;
    }
  }
}

void cleaning_pass(SimulationState& state, const CleaningPolicy& policy) {
  const int tick_number = state.tick + 1;  // tick being executed, 1-based
  for (SurfaceKind kind : {SurfaceKind::HighTouch, SurfaceKind::LowTouch}) {
    if (!cleaning_due(policy, tick_number, kind)) continue;
    const double rate = policy.rate(kind);
    for (int idx : select_targets(policy, state.grid, kind, state.rng)) {
      apply_cleaning(state.grid.surfaces()[static_cast<std::size_t>(idx)], rate);
    }
  }
}

void transition_pass(SimulationState& state, const Parameters& params) {
  std::vector<Patient> remaining;
  remaining.reserve(state.patients.size());
  for (Patient& p : state.patients) {
    const TransitionOutcome outcome = transition(p, params, state.rng);
    switch (outcome.kind) {
      case TransitionOutcome::Kind::Stay:
        ++p.ticks_in_state;
        remaining.push_back(p);
        break;
      case TransitionOutcome::Kind::Change:
        if (p.state == PatientState::Susceptible &&
            (outcome.next == PatientState::Colonized ||
             outcome.next == PatientState::Diseased)) {
          ++state.counters.spontaneous_colonizations;
        }
        p.state = outcome.next;
        p.ticks_in_state = 0;
        remaining.push_back(p);
        break;
      case TransitionOutcome::Kind::Discharge:
        ++state.counters.discharges;
        break;
      case TransitionOutcome::Kind::Death:
        ++state.counters.deaths;
        break;
    }
  }
  state.patients = std::move(remaining);
}

void step(SimulationState& state, const SimConfig& config) {
  admit_patients(state, config.params);
  movement_pass(state);
  shedding_pass(state, config.params);
  infection_pass(state, config.params);
  if (config.direct_infection) direct_contact_infections(state, config.params);
  cleaning_pass(state, config.cleaning);
  transition_pass(state, config.params);
  ++state.tick;
}

ReplicaResult run_replica(const SimConfig& config) {
  return run_replica(config, 0, "adhoc", 0);
}

ReplicaResult run_replica(const SimConfig& config, int experiment_id, std::string combo_id,
                          int replica_index, const TickObserver& observer) {
  SimulationState state = init_state(config);
  if (observer) observer(state);
  for (int t = 0; t < config.horizon(); ++t) {
    step(state, config);
    if (observer) observer(state);
  }
  ReplicaResult result;
  result.experiment_id = experiment_id;
  result.combo_id = std::move(combo_id);
  result.replica_index = replica_index;
  result.seed = config.seed;
  result.direct_infection = config.direct_infection;
  result.cleaning = config.cleaning;
  result.horizon = config.horizon();
  result.counters = state.counters;
  return result;
}

}  // namespace cdiffsim
