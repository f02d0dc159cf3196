#include <doctest.h>

#include <array>
#include <map>

#include "cdiffsim/errors.hpp"
#include "cdiffsim/model.hpp"

using namespace cdiffsim;

TEST_CASE("validate_parameters accepts the default parameter table") {
  const Parameters p;
  CHECK(validate_parameters(p) == p);
}

TEST_CASE("validate_parameters rejects a denormalized admission mix") {
  Parameters p;
  p.a_D = 0.0;  // sum = 0.99
  CHECK_THROWS_AS(validate_parameters(p), ValidationError);
  try {
    validate_parameters(p);
  } catch (const ValidationError& err) {
    CHECK(err.code() == ValidationCode::AdmissionMixNotNormalized);
  }
}

TEST_CASE("validate_parameters rejects out-of-range probabilities") {
  Parameters p;
  p.P_IC = 1.5;
  try {
    validate_parameters(p);
    FAIL("expected ValidationError");
  } catch (const ValidationError& err) {
    CHECK(err.code() == ValidationCode::ProbabilityOutOfRange);
    CHECK(err.field() == "P_IC");
  }
}

TEST_CASE("validate_parameters rejects negative shed rates and horizon") {
  Parameters p;
  p.shed_C = -0.001;
  try {
    validate_parameters(p);
    FAIL("expected ValidationError");
  } catch (const ValidationError& err) {
    CHECK(err.code() == ValidationCode::NegativeValue);
  }
  Parameters q;
  q.horizon = -1;
  CHECK_THROWS_AS(validate_parameters(q), ValidationError);
}

TEST_CASE("sample_admission_state follows the cumulative R,S,C,D order") {
  const Parameters p;
  CHECK(sample_admission_state(p, 0.50) == PatientState::Resistant);
  CHECK(sample_admission_state(p, 0.75) == PatientState::Susceptible);
  CHECK(sample_admission_state(p, 0.84) == PatientState::Colonized);
  CHECK(sample_admission_state(p, 0.99) == PatientState::Diseased);
  CHECK(sample_admission_state(p, 0.0) == PatientState::Resistant);

  Parameters degenerate;
  degenerate.a_R = 1.0;
  degenerate.a_S = degenerate.a_C = degenerate.a_D = 0.0;
  CHECK(sample_admission_state(degenerate, 0.9999) == PatientState::Resistant);
}

TEST_CASE("admission sampling matches the mix over 1e5 draws") {
  const Parameters p;
  Rng rng(1234);
  std::array<int, 4> counts{};
  const int n = 100000;
  for (int i = 0; i < n; ++i) {
    counts[static_cast<std::size_t>(sample_admission_state(p, rng.next_double()))]++;
  }
  const std::array<double, 4> expected{p.a_R, p.a_S, p.a_C, p.a_D};
  for (std::size_t s = 0; s < 4; ++s) {
    CHECK(std::abs(double(counts[s]) / n - expected[s]) < 0.01);
  }
}

TEST_CASE("min_stay values") {
  const Parameters p;
  CHECK(min_stay(p, PatientState::Resistant) == 10);
  CHECK(min_stay(p, PatientState::Susceptible) == 30);
  CHECK(min_stay(p, PatientState::Colonized) == 15);
  CHECK(min_stay(p, PatientState::Diseased) == 10);
}

TEST_CASE("transition stays below the minimum stay") {
  const Parameters p;
  Rng rng(7);
  Patient patient{0, PatientState::Resistant, 5, {10, 10}};
  for (int i = 0; i < 100; ++i) {
    CHECK(transition(patient, p, rng) == TransitionOutcome::stay());
  }
}

TEST_CASE("transition with all probabilities zero always stays") {
  Parameters p;
  p.k_R = p.k_S = p.k_C = p.k_D = 0.0;
  p.P_RS = p.P_SC = p.P_SD = p.P_CD = p.P_CR = p.P_DR = p.P_DS = p.P_Death = 0.0;
  Rng rng(99);
  for (PatientState s : {PatientState::Resistant, PatientState::Susceptible,
                         PatientState::Colonized, PatientState::Diseased}) {
    Patient patient{0, s, 1000, {5, 5}};
    for (int i = 0; i < 2500; ++i) {
      CHECK(transition(patient, p, rng) == TransitionOutcome::stay());
    }
  }
}

TEST_CASE("transition never returns Death for non-diseased states") {
  const Parameters p;
  Rng rng(21);
  for (PatientState s :
       {PatientState::Resistant, PatientState::Susceptible, PatientState::Colonized}) {
    Patient patient{0, s, 1000, {5, 5}};
    for (int i = 0; i < 20000; ++i) {
      CHECK(transition(patient, p, rng).kind != TransitionOutcome::Kind::Death);
    }
  }
}

namespace {

// Closed-form law of the ordered-Bernoulli draws: the k-th option fires with
// probability p_k times the product of the failures before it.
std::map<std::string, double> ordered_law(const std::vector<std::pair<std::string, double>>& draws) {
  std::map<std::string, double> law;
  double all_fail = 1.0;
  for (const auto& [name, prob] : draws) {
    law[name] = all_fail * prob;
    all_fail *= (1.0 - prob);
  }
  law["stay"] = all_fail;
  return law;
}

std::string outcome_key(const TransitionOutcome& out) {
  switch (out.kind) {
    case TransitionOutcome::Kind::Stay: return "stay";
    case TransitionOutcome::Kind::Discharge: return "discharge";
    case TransitionOutcome::Kind::Death: return "death";
    case TransitionOutcome::Kind::Change: return std::string("to_") + std::string(to_string(out.next));
  }
  return "?";
}

}  // namespace

TEST_CASE("transition frequencies match the ordered-Bernoulli law at 1e6 trials") {
  const Parameters p;
  const int trials = 1000000;

  struct StateCase {
    PatientState state;
    std::vector<std::pair<std::string, double>> draws;
  };
  const std::vector<StateCase> cases = {
      {PatientState::Diseased,
       {{"death", p.P_Death}, {"to_resistant", p.P_DR}, {"to_susceptible", p.P_DS},
        {"discharge", p.k_D}}},
      {PatientState::Resistant, {{"to_susceptible", p.P_RS}, {"discharge", p.k_R}}},
      {PatientState::Susceptible,
       {{"to_colonized", p.P_SC}, {"to_diseased", p.P_SD}, {"discharge", p.k_S}}},
      {PatientState::Colonized,
       {{"to_diseased", p.P_CD}, {"to_resistant", p.P_CR}, {"discharge", p.k_C}}},
  };

  Rng rng(20240);
  for (const StateCase& c : cases) {
    const auto law = ordered_law(c.draws);
    std::map<std::string, int> observed;
    Patient patient{0, c.state, 1000, {5, 5}};
    for (int i = 0; i < trials; ++i) {
      observed[outcome_key(transition(patient, p, rng))]++;
    }
    for (const auto& [key, prob] : law) {
      const double freq = double(observed[key]) / trials;
      INFO("state=", to_string(c.state), " outcome=", key, " expected=", prob,
           " observed=", freq);
      CHECK(std::abs(freq - prob) < 0.002);
    }
  }
}

TEST_CASE("diseased death example: first draw success yields Death at the minimum stay") {
  Parameters p;
  p.P_Death = 1.0;  // force the first draw to succeed
  Rng rng(3);
  Patient patient{0, PatientState::Diseased, 10, {5, 5}};
  CHECK(transition(patient, p, rng) == TransitionOutcome::death());
}
