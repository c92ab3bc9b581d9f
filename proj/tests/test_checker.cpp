#include <algorithm>

#include "doctest.h"
#include "tautcoh/checker.hpp"

using namespace tautcoh;
using namespace tautcoh::checker;
using graded::GradedDim;

namespace {

bool all_pass(const std::vector<CheckOutcome>& v) {
  return std::all_of(v.begin(), v.end(), [](const CheckOutcome& o) { return o.passed; });
}

void same(const std::vector<CheckOutcome>& a, const std::vector<CheckOutcome>& b) {
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].name == b[i].name);
    CHECK(a[i].passed == b[i].passed);
    CHECK(a[i].details == b[i].details);
  }
}

}  // namespace

TEST_CASE("compare_dims names the first disagreeing degree") {
  const auto ok = compare_dims("x", {1, 0, 2}, {1, 0, 2});
  CHECK(ok.passed);
  const auto bad = compare_dims("x", {1, 0, 2}, {1, 0, 3});
  CHECK_FALSE(bad.passed);
  CHECK(bad.details.find("expected [1,0,2]") != std::string::npos);
  CHECK(bad.details.find("actual [1,0,3]") != std::string::npos);
  CHECK(bad.details.find("degree 2") != std::string::npos);
  CHECK(compare_dims("x", {1}, {1, 0, 0, 4}).details.find("degree 3") != std::string::npos);
  CHECK_FALSE(compare_ints("y", 3, 4).passed);
  CHECK(compare_ints("y", -2, -2).passed);
}

TEST_CASE("individual checks pass") {
  CHECK(all_pass(check_sym_enumeration(4, 3)));
  CHECK(all_pass(check_conjecture_specialization(20, 5)));
  CHECK(all_pass(check_twisted_reduces_trivial(4, 2)));
  CHECK(all_pass(check_two_routes_n2(2, 2)));
  CHECK(all_pass(check_les_euler(preset_sample_surfaces())));
  CHECK(all_pass(check_les_exactness(preset_sample_surfaces())));
  CHECK(all_pass(check_koszul_anchor()));
  CHECK(all_pass(check_pure_power(2, 4, 4, 3)));
  CHECK(all_pass(check_p2_model(4, 2)));
  CHECK(preset_sample_surfaces().size() == 6);
}

TEST_CASE("serial and parallel fan-out give identical outcomes") {
  same(check_sym_enumeration(5, 3, Execution::Serial), check_sym_enumeration(5, 3, Execution::Parallel));
  same(check_conjecture_specialization(30, 11, Execution::Serial),
       check_conjecture_specialization(30, 11, Execution::Parallel));
  same(check_two_routes_n2(2, 2, Execution::Serial), check_two_routes_n2(2, 2, Execution::Parallel));
  same(check_pure_power(2, 4, 3, 9, Execution::Serial), check_pure_power(2, 4, 3, 9, Execution::Parallel));
}

TEST_CASE("seeded checks are reproducible") {
  same(check_conjecture_specialization(25, 42), check_conjecture_specialization(25, 42));
  CHECK(check_conjecture_specialization(25, 42).size() == 50);
}

TEST_CASE("default suite passes") {
  const auto sections = run_suite(Suite::Default);
  CHECK(sections.size() >= 8);
  for (const auto& sec : sections) {
    CAPTURE(sec.name);
    CHECK_FALSE(sec.outcomes.empty());
    for (const auto& o : sec.outcomes) {
      CAPTURE(o.name);
      CAPTURE(o.details);
      CHECK(o.passed);
    }
  }
}
