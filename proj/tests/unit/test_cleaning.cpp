#include <doctest.h>

#include <set>

#include "cdiffsim/cleaning.hpp"
#include "cdiffsim/errors.hpp"

using namespace cdiffsim;

TEST_CASE("cleaning_due fires on interval multiples only") {
  const auto total = CleaningPolicy::total(10, 0.9, 15, 0.9);
  CHECK(cleaning_due(total, 20, SurfaceKind::HighTouch));
  CHECK(!cleaning_due(total, 15, SurfaceKind::HighTouch));
  CHECK(cleaning_due(total, 15, SurfaceKind::LowTouch));
  CHECK(!cleaning_due(total, 20, SurfaceKind::LowTouch));

  const auto none = CleaningPolicy::none();
  for (int tick = 1; tick <= 100; ++tick) {
    CHECK(!cleaning_due(none, tick, SurfaceKind::HighTouch));
    CHECK(!cleaning_due(none, tick, SurfaceKind::LowTouch));
  }
}

TEST_CASE("select_targets: total selects all 72 surfaces of the kind") {
  const Grid g = generate_layout();
  Rng rng(5);
  const auto policy = CleaningPolicy::total(10, 0.5, 10, 0.5);
  const auto targets = select_targets(policy, g, SurfaceKind::HighTouch, rng);
  CHECK(targets.size() == 72);
  for (int idx : targets) {
    CHECK(g.surfaces()[std::size_t(idx)].kind == SurfaceKind::HighTouch);
  }
}

TEST_CASE("select_targets: random selects distinct surfaces of the kind") {
  const Grid g = generate_layout();
  Rng rng(5);
  const auto policy = CleaningPolicy::random(10, 0.5, 10, 0.5, 24);
  const auto targets = select_targets(policy, g, SurfaceKind::LowTouch, rng);
  CHECK(targets.size() == 24);
  std::set<int> distinct(targets.begin(), targets.end());
  CHECK(distinct.size() == 24);
  for (int idx : targets) {
    CHECK(g.surfaces()[std::size_t(idx)].kind == SurfaceKind::LowTouch);
  }
}

TEST_CASE("select_targets: random with count 72 is the full set") {
  const Grid g = generate_layout();
  Rng rng(11);
  const auto policy = CleaningPolicy::random(10, 0.5, 10, 0.5, 72);
  const auto targets = select_targets(policy, g, SurfaceKind::HighTouch, rng);
  std::set<int> sampled(targets.begin(), targets.end());
  const auto total = select_targets(CleaningPolicy::total(10, 0.5, 10, 0.5), g,
                                    SurfaceKind::HighTouch, rng);
  CHECK(sampled == std::set<int>(total.begin(), total.end()));
}

TEST_CASE("random selection includes each surface with frequency count/72") {
  const Grid g = generate_layout();
  Rng rng(2024);
  const auto policy = CleaningPolicy::random(10, 0.5, 10, 0.5, 24);
  const int events = 3000;
  std::map<int, int> inclusions;
  for (int e = 0; e < events; ++e) {
    for (int idx : select_targets(policy, g, SurfaceKind::HighTouch, rng)) {
      inclusions[idx]++;
    }
  }
  CHECK(inclusions.size() == 72);
  for (const auto& [idx, count] : inclusions) {
    CHECK(std::abs(double(count) / events - 24.0 / 72.0) < 0.04);
  }
}

TEST_CASE("apply_cleaning removes the given fraction of contamination") {
  Surface s{SurfaceKind::HighTouch, {3, 3}, 0.8};
  apply_cleaning(s, 0.5);
  CHECK(s.contamination == doctest::Approx(0.4).epsilon(1e-12));
  apply_cleaning(s, 1.0);
  CHECK(s.contamination == 0.0);
  apply_cleaning(s, 0.7);
  CHECK(s.contamination == 0.0);
}

TEST_CASE("apply_cleaning never increases contamination or makes it negative") {
  Rng rng(8);
  for (int i = 0; i < 10000; ++i) {
    const double before = rng.next_double() * 5.0;
    const double rate = rng.next_double();
    Surface s{SurfaceKind::LowTouch, {3, 16}, before};
    apply_cleaning(s, rate);
    CHECK(s.contamination >= 0.0);
    CHECK(s.contamination <= before);
    CHECK(s.contamination == doctest::Approx(before * (1.0 - rate)).epsilon(1e-12));
  }
}

TEST_CASE("policy validation rejects bad intervals, rates and counts") {
  CHECK_THROWS_AS(CleaningPolicy::total(0, 0.5, 10, 0.5).validate(), ValidationError);
  CHECK_THROWS_AS(CleaningPolicy::total(10, 1.5, 10, 0.5).validate(), ValidationError);
  CHECK_THROWS_AS(CleaningPolicy::random(10, 0.5, 10, 0.5, 73).validate(), ValidationError);
  CHECK_THROWS_AS(CleaningPolicy::random(10, 0.5, 10, 0.5, -1).validate(), ValidationError);
  CHECK_NOTHROW(CleaningPolicy::none().validate());
  CHECK_NOTHROW(CleaningPolicy::total(10, 1.0, 30, 0.5).validate());
  CHECK_NOTHROW(CleaningPolicy::random(10, 0.5, 10, 0.5, 48).validate());
}
