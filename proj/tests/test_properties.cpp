#include "catch_amalgamated.hpp"

#include "support/property_suites.hpp"

using namespace kwk;

namespace {

void report(const properties::SuiteResult& r, int cases) {
  CHECK(r.checked == cases);
  for (const auto& f : r.failures) FAIL_CHECK(f);
}

}  // namespace

TEST_CASE("certificates are sound on random strictly equivalent pencils") {
  report(properties::certificate_soundness(100, 20240611), 100);
}

TEST_CASE("sections never shorten the shortest scroll block below the original") {
  auto r = properties::section_monotonicity(50, 5150);
  report(r, 50);
  CHECK(r.with_scroll > 10);
}

TEST_CASE("natural-coordinate sections of scrolls have short nilpotent blocks") {
  report(properties::coordinate_sections(50, 8128), 50);
}

TEST_CASE("other seeds") {
  for (std::uint32_t seed : {1u, 2u, 3u}) {
    report(properties::certificate_soundness(30, seed), 30);
    report(properties::section_monotonicity(30, seed), 30);
    report(properties::coordinate_sections(30, seed), 30);
  }
}
