#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "tautcoh/checker.hpp"
#include "tautcoh/formulas.hpp"
#include "tautcoh/linalg.hpp"
#include "tautcoh/surface.hpp"

using namespace tautcoh;
using checker::CheckOutcome;

namespace {

struct Criterion {
  std::string name;
  double limit_seconds;
  std::function<std::vector<CheckOutcome>()> run;
};

std::vector<CheckOutcome> with(std::vector<CheckOutcome> a, std::vector<CheckOutcome> b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"AC1 super-symmetric oracle, degrees 0..4, total <= 6, k <= 4", 10.0,
       [] { return checker::check_sym_enumeration(6, 4); }},
      {"AC2 conjecture specializes at n = 2, 3 on 100 seeded inputs", 5.0,
       [] { return checker::check_conjecture_specialization(100, 42); }},
      {"AC3 A = O reduction on P^2, n in 2..6, d in 0..3", 10.0,
       [] { return checker::check_twisted_reduces_trivial(6, 3); }},
      {"AC4 two-route kernel agreement at n = 2, d, e in 0..3", 10.0,
       [] {
         const auto s = surface::p2_surface(1, 1);
         const auto k = formulas::sections_s2_twisted(2, s).kernel.kernel_dim;
         const auto chi = formulas::euler_K_twisted(2, s.bundle(surface::Slot::A).h, s.bundle(surface::Slot::L2A).h,
                                                    s.bundle(surface::Slot::L2A2).h);
         return with(checker::check_two_routes_n2(3, 3),
                     {checker::compare_ints("anchor d=e=1 matrix", 15, static_cast<std::int64_t>(k)),
                      checker::compare_ints("anchor d=e=1 euler", 15, chi)});
       }},
      {"AC5 Koszul syzygy anchor", 1.0, [] { return checker::check_koszul_anchor(); }},
      {"AC6 pure powers, n in 2..5", 5.0, [] { return checker::check_pure_power(2, 5, 10, 7); }},
      {"AC7 Euler exactness on presets", 5.0,
       [] {
         const auto surfaces = checker::preset_sample_surfaces();
         return with(checker::check_les_exactness(surfaces), checker::check_les_euler(surfaces));
       }},
      {"AC8 P^2 model soundness", 5.0, [] { return checker::check_p2_model(6, 3); }},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::vector<CheckOutcome> outcomes;
    std::string error;
    try {
      outcomes = c.run();
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::size_t bad = 0;
    for (const auto& o : outcomes) bad += !o.passed;
    const bool ok = error.empty() && !outcomes.empty() && bad == 0 && secs < c.limit_seconds;
    failed += !ok;
    std::printf("[%s] %s: %zu checks, %zu failed, %.3f s (limit %.0f s)%s%s\n", ok ? "PASS" : "FAIL",
                c.name.c_str(), outcomes.size(), bad, secs, c.limit_seconds, error.empty() ? "" : ", error: ",
                error.c_str());
    for (const auto& o : outcomes)
      if (!o.passed) std::printf("       %s: %s\n", o.name.c_str(), o.details.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
