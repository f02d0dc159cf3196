#include "cdiffsim/model.hpp"

#include <cmath>
#include <string>

#include "cdiffsim/errors.hpp"

namespace cdiffsim {

std::string_view to_string(PatientState s) {
  switch (s) {
    case PatientState::Resistant: return "resistant";
    case PatientState::Susceptible: return "susceptible";
    case PatientState::Colonized: return "colonized";
    case PatientState::Diseased: return "diseased";
  }
  return "?";
}

namespace {

void check_probability(double value, const char* field) {
  if (!(value >= 0.0 && value <= 1.0)) {
    throw ValidationError(ValidationCode::ProbabilityOutOfRange, field,
                          std::string(field) + " = " + std::to_string(value) +
                              " is outside [0, 1]");
  }
}

void check_nonnegative(double value, const char* field) {
  if (!(value >= 0.0)) {
    throw ValidationError(ValidationCode::NegativeValue, field,
                          std::string(field) + " = " + std::to_string(value) +
                              " must be nonnegative");
  }
}

void check_nonnegative(int value, const char* field) {
  if (value < 0) {
    throw ValidationError(ValidationCode::NegativeValue, field,
                          std::string(field) + " = " + std::to_string(value) +
                              " must be nonnegative");
  }
}

}  // namespace

Parameters validate_parameters(const Parameters& p) {
  check_probability(p.a_R, "a_R");
  check_probability(p.a_S, "a_S");
  check_probability(p.a_C, "a_C");
  check_probability(p.a_D, "a_D");
  const double mix = p.a_R + p.a_S + p.a_C + p.a_D;
  if (std::abs(mix - 1.0) > 1e-9) {
    throw ValidationError(ValidationCode::AdmissionMixNotNormalized, "a_R+a_S+a_C+a_D",
                          "admission-state probabilities sum to " + std::to_string(mix) +
                              ", expected 1");
  }
  check_probability(p.k_R, "k_R");
  check_probability(p.k_S, "k_S");
  check_probability(p.k_C, "k_C");
  check_probability(p.k_D, "k_D");
  check_probability(p.P_RS, "P_RS");
  check_probability(p.P_SC, "P_SC");
  check_probability(p.P_SD, "P_SD");
  check_probability(p.P_CD, "P_CD");
  check_probability(p.P_CR, "P_CR");
  check_probability(p.P_DR, "P_DR");
  check_probability(p.P_DS, "P_DS");
  check_probability(p.P_Death, "P_Death");
  check_probability(p.P_IC, "P_IC");
  check_probability(p.P_ID, "P_ID");
  check_probability(p.P_HT, "P_HT");
  check_probability(p.P_LT, "P_LT");
  check_nonnegative(p.shed_C, "shed_C");
  check_nonnegative(p.shed_D, "shed_D");
  check_nonnegative(p.dose_scale, "dose_scale");
  check_nonnegative(p.min_stay_R, "min_stay_R");
  check_nonnegative(p.min_stay_S, "min_stay_S");
  check_nonnegative(p.min_stay_C, "min_stay_C");
  check_nonnegative(p.min_stay_D, "min_stay_D");
  check_nonnegative(p.initial_patients, "initial_patients");
  check_nonnegative(p.admissions_per_tick, "admissions_per_tick");
  check_nonnegative(p.capacity, "capacity");
  check_nonnegative(p.horizon, "horizon");
  return p;
}

PatientState sample_admission_state(const Parameters& params, double draw) {
  if (draw < params.a_R) return PatientState::Resistant;
  if (draw < params.a_R + params.a_S) return PatientState::Susceptible;
  if (draw < params.a_R + params.a_S + params.a_C) return PatientState::Colonized;
  return PatientState::Diseased;
}

int min_stay(const Parameters& params, PatientState state) {
  switch (state) {
    case PatientState::Resistant: return params.min_stay_R;
    case PatientState::Susceptible: return params.min_stay_S;
    case PatientState::Colonized: return params.min_stay_C;
    case PatientState::Diseased: return params.min_stay_D;
  }
  return 0;
}

TransitionOutcome transition(const Patient& patient, const Parameters& p, Rng& rng) {
  if (patient.ticks_in_state < min_stay(p, patient.state)) return TransitionOutcome::stay();

  switch (patient.state) {
    case PatientState::Diseased:
      if (rng.bernoulli(p.P_Death)) return TransitionOutcome::death();
      if (rng.bernoulli(p.P_DR)) return TransitionOutcome::change(PatientState::Resistant);
      if (rng.bernoulli(p.P_DS)) return TransitionOutcome::change(PatientState::Susceptible);
      if (rng.bernoulli(p.k_D)) return TransitionOutcome::discharge();
      break;
    case PatientState::Resistant:
      if (rng.bernoulli(p.P_RS)) return TransitionOutcome::change(PatientState::Susceptible);
      if (rng.bernoulli(p.k_R)) return TransitionOutcome::discharge();
      break;
    case PatientState::Susceptible:
      if (rng.bernoulli(p.P_SC)) return TransitionOutcome::change(PatientState::Colonized);
      if (rng.bernoulli(p.P_SD)) return TransitionOutcome::change(PatientState::Diseased);
      if (rng.bernoulli(p.k_S)) return TransitionOutcome::discharge();
      break;
    case PatientState::Colonized:
      if (rng.bernoulli(p.P_CD)) return TransitionOutcome::change(PatientState::Diseased);
      if (rng.bernoulli(p.P_CR)) return TransitionOutcome::change(PatientState::Resistant);
      if (rng.bernoulli(p.k_C)) return TransitionOutcome::discharge();
      break;
  }
  return TransitionOutcome::stay();
}

}  // namespace cdiffsim
