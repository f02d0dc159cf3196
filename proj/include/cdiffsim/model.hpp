#pragma once

#include <string_view>

#include "cdiffsim/rng.hpp"

namespace cdiffsim {

enum class PatientState { Resistant, Susceptible, Colonized, Diseased };

// Colonized and Diseased patients shed contamination and can infect by
// direct contact.
constexpr bool is_infectious(PatientState s) {
  return s == PatientState::Colonized || s == PatientState::Diseased;
}

std::string_view to_string(PatientState s);

struct Cell {
  int row = 0;
  int col = 0;
  friend bool operator==(const Cell&, const Cell&) = default;
};

struct Patient {
  int id = 0;
  PatientState state = PatientState::Resistant;
  int ticks_in_state = 0;  // reset to 0 on every state change
  Cell position{};
  friend bool operator==(const Patient&, const Patient&) = default;
};

// Complete model parameter set. The defaults are the canonical ward
// configuration used throughout the experiment designs.
struct Parameters {
  // Admission-state mix (must sum to 1)
  double a_R = 0.75;
  double a_S = 0.09;
  double a_C = 0.15;
  double a_D = 0.01;
  // Per-tick discharge probabilities, drawn only after the minimum stay
  double k_R = 0.33;
  double k_S = 0.15;
  double k_C = 0.15;
  double k_D = 0.068;
  // Per-tick state-transition probabilities, drawn only after the minimum stay
  double P_RS = 0.02;
  double P_SC = 0.001;
  double P_SD = 0.001;
  double P_CD = 0.024;
  double P_CR = 0.012;
  double P_DR = 0.01;
  double P_DS = 0.08;
  double P_Death = 0.009;
  // Per-contact direct-infection probabilities by source state
  double P_IC = 0.48;
  double P_ID = 0.382;
  // Per-tick touch probabilities by surface kind
  double P_HT = 0.4;
  double P_LT = 0.2;
  // Contamination added to a surface per successful touch by an infectious patient
  double shed_C = 0.006;
  double shed_D = 0.013;
  // Dose-response slope: a successful touch infects with probability
  // min(1, dose_scale * contamination). See README for calibration notes.
  double dose_scale = 100.0;
  // Minimum ticks in a state before any transition or discharge draw
  int min_stay_R = 10;
  int min_stay_S = 30;
  int min_stay_C = 15;
  int min_stay_D = 10;
  // Ward structure
  int initial_patients = 50;
  int admissions_per_tick = 10;
  int capacity = 150;
  // Simulation length in ticks
  int horizon = 365;

  friend bool operator==(const Parameters&, const Parameters&) = default;
};

// Returns the parameter set unchanged when every invariant holds, throws
// ValidationError otherwise.
Parameters validate_parameters(const Parameters& params);

// Categorical sample with cumulative order R, S, C, D over a uniform draw
// in [0, 1).
PatientState sample_admission_state(const Parameters& params, double draw);

int min_stay(const Parameters& params, PatientState state);

struct TransitionOutcome {
  enum class Kind { Stay, Change, Discharge, Death };
  Kind kind = Kind::Stay;
  PatientState next = PatientState::Resistant;  // meaningful only for Change

  static TransitionOutcome stay() { return {Kind::Stay, PatientState::Resistant}; }
  static TransitionOutcome change(PatientState next) { return {Kind::Change, next}; }
  static TransitionOutcome discharge() { return {Kind::Discharge, PatientState::Resistant}; }
  static TransitionOutcome death() { return {Kind::Death, PatientState::Resistant}; }

  friend bool operator==(const TransitionOutcome&, const TransitionOutcome&) = default;
};

// Per-tick state machine. Returns Stay while the patient is inside its
// minimum stay; afterwards evaluates independent Bernoulli draws in a fixed
// order, returning on the first success:
//   Diseased:    Death(P_Death), Resistant(P_DR), Susceptible(P_DS), Discharge(k_D)
//   Resistant:   Susceptible(P_RS), Discharge(k_R)
//   Susceptible: Colonized(P_SC), Diseased(P_SD), Discharge(k_S)
//   Colonized:   Diseased(P_CD), Resistant(P_CR), Discharge(k_C)
TransitionOutcome transition(const Patient& patient, const Parameters& params, Rng& rng);

}  // namespace cdiffsim
