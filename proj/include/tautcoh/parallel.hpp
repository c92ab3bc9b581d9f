#pragma once

#include <cstddef>
#include <exception>
#include <vector>

namespace tautcoh {

enum class Execution { Serial, Parallel };

/// out[i] = f(i) for i < count. Under Execution::Parallel the indices are
/// spread over OpenMP threads; the result order never depends on scheduling.
/// The first exception (by index) is rethrown after the loop.
template <typename Result, typename F>
std::vector<Result> indexed_map(std::size_t count, F&& f, Execution exec) {
  std::vector<Result> out(count);
  std::vector<std::exception_ptr> errors(count);
  const auto n = static_cast<std::ptrdiff_t>(count);
#pragma omp parallel for schedule(dynamic) if (exec == Execution::Parallel)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = f(static_cast<std::size_t>(i));
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

}  // namespace tautcoh
