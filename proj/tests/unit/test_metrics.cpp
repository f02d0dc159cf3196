#include <doctest.h>

#include <algorithm>
#include <random>

#include "cdiffsim/errors.hpp"
#include "cdiffsim/metrics.hpp"

using namespace cdiffsim;

TEST_CASE("record_infection increments exactly one counter") {
  AttributionCounters c;
  record_infection(c, InfectionSource::HighTouch);
  record_infection(c, InfectionSource::HighTouch);
  record_infection(c, InfectionSource::LowTouch);
  record_infection(c, InfectionSource::ColonizedPatient);
  record_infection(c, InfectionSource::DiseasedPatient);
  CHECK(c.infected_by_ht == 2);
  CHECK(c.infected_by_lt == 1);
  CHECK(c.infected_by_colonized == 1);
  CHECK(c.infected_by_diseased == 1);
  CHECK(c.total_contact_infections() == 5);
}

TEST_CASE("shares reproduce the attribution percentages") {
  AttributionCounters c;
  c.infected_by_ht = 130;
  c.infected_by_lt = 73;
  c.infected_by_colonized = 697;
  c.infected_by_diseased = 100;
  const auto s = shares(c);
  REQUIRE(s.has_value());
  CHECK(s->high_touch == doctest::Approx(0.13).epsilon(1e-12));
  CHECK(s->low_touch == doctest::Approx(0.073).epsilon(1e-12));
  CHECK(s->colonized == doctest::Approx(0.697).epsilon(1e-12));
  CHECK(s->diseased == doctest::Approx(0.10).epsilon(1e-12));
  CHECK(s->high_touch + s->low_touch + s->colonized + s->diseased ==
        doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("shares are undefined with no recorded infection") {
  const AttributionCounters c;
  CHECK(!shares(c).has_value());
}

TEST_CASE("summarize basic arithmetic") {
  const std::vector<double> values{1.0, 2.0, 3.0};
  const SummaryStats s = summarize(values);
  CHECK(s.n == 3);
  CHECK(s.mean == doctest::Approx(2.0));
  CHECK(s.median == doctest::Approx(2.0));
  CHECK(s.min == 1.0);
  CHECK(s.max == 3.0);
  CHECK(s.q1 == doctest::Approx(1.5));
  CHECK(s.q3 == doctest::Approx(2.5));
  CHECK(s.std_dev == doctest::Approx(1.0));
}

TEST_CASE("summarize median uses the midpoint for even n") {
  const std::vector<double> values{4.0, 1.0, 3.0, 2.0};
  const SummaryStats s = summarize(values);
  CHECK(s.median == doctest::Approx(2.5));
}

TEST_CASE("summarize of a constant series has zero spread") {
  const std::vector<double> values(20, 7.5);
  const SummaryStats s = summarize(values);
  CHECK(s.std_dev == 0.0);
  CHECK(s.q1 == s.q3);
  CHECK(s.min == s.max);
}

TEST_CASE("summarize throws on an empty group") {
  CHECK_THROWS_AS(summarize({}), EmptyGroupError);
}

TEST_CASE("summarize is permutation-invariant and preserves quartile order") {
  std::mt19937 shuffler(17);
  Rng rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> values;
    const int n = 1 + int(rng.next_below(40));
    for (int i = 0; i < n; ++i) values.push_back(rng.next_double() * 100.0);

    const SummaryStats a = summarize(values);
    std::shuffle(values.begin(), values.end(), shuffler);
    const SummaryStats b = summarize(values);

    CHECK(a.mean == b.mean);
    CHECK(a.median == b.median);
    CHECK(a.q1 == b.q1);
    CHECK(a.q3 == b.q3);
    CHECK(a.min <= a.q1);
    CHECK(a.q1 <= a.median);
    CHECK(a.median <= a.q3);
    CHECK(a.q3 <= a.max);
  }
}

TEST_CASE("summarize_group applies the metric selector") {
  std::vector<ReplicaResult> results(3);
  results[0].counters.infected_by_ht = 10;
  results[1].counters.infected_by_ht = 20;
  results[2].counters.infected_by_ht = 30;
  const SummaryStats s = summarize_group(
      results, [](const ReplicaResult& r) { return double(r.counters.infected_by_ht); });
  CHECK(s.n == 3);
  CHECK(s.mean == doctest::Approx(20.0));
}
