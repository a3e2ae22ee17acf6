#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "properties.hpp"

namespace {

void expect_clean(const props::Tally& t, std::size_t min_cases) {
  CHECK(t.cases >= min_cases);
  for (const auto& f : t.failures) FAIL_CHECK(f);
}

}  // namespace

TEST_CASE("Birkhoff round trip") { expect_clean(props::birkhoff(101, 400), 400); }

TEST_CASE("Groebner bases are reproducible") {
  expect_clean(props::groebner_determinism(202, 300), 300);
}

TEST_CASE("normal forms are idempotent") {
  expect_clean(props::normal_form_idempotence(303, 400), 400);
}

TEST_CASE("verdicts commute with transposition") {
  expect_clean(props::transposition(404, 250), 250);
}
