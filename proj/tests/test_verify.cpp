#include <doctest.h>

#include "cartankit/error.hpp"
#include "cartankit/verify.hpp"

using namespace cartankit;

TEST_CASE("registry") {
  const auto& ids = verify::check_ids();
  REQUIRE(ids.size() == 12);
  CHECK(ids.front() == "C1");
  CHECK(ids.back() == "C12");
  CHECK(verify::check_name("C4") == "reg_in_C");
  CHECK(verify::default_samples("C3") == 200);
  CHECK_THROWS_AS(verify::run_check("C13", 0), InputError);
}

TEST_CASE("report JSON has sorted keys and optional timing") {
  verify::CheckReport r = verify::run_check("C9", 3);
  std::string canonical = verify::to_json(r, false).dump();
  CHECK(canonical.find("runtime_ms") == std::string::npos);
  CHECK(canonical.rfind(R"({"check":"C9","outcome":"pass","samples":0,"seed":3,"witnesses":)", 0) == 0);
  CHECK(verify::to_json(r).contains("runtime_ms"));
}

TEST_CASE("individual checks pass") {
  CHECK(verify::run_check("C4", 7, 200).outcome == verify::Outcome::Pass);
  CHECK(verify::run_check("C9", 11).outcome == verify::Outcome::Pass);
  CHECK(verify::run_check("C2", 0).outcome == verify::Outcome::Pass);
  CHECK(verify::run_check("C8", 0).outcome == verify::Outcome::Pass);
  CHECK(verify::run_check("C3", 1, 500).outcome != verify::Outcome::Fail);
}

TEST_CASE("determinism and seed independence of outcomes") {
  for (const auto& id : {"C1", "C5", "C7", "C11"}) {
    auto a = verify::run_check(id, 42, 40);
    auto b = verify::run_check(id, 42, 40);
    auto c = verify::run_check(id, 43, 40);
    CHECK(verify::to_json(a, false).dump() == verify::to_json(b, false).dump());
    CHECK(a.outcome == c.outcome);
  }
}
