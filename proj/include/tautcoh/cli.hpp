#pragma once

// Config ingestion and report emission for the tautcoh command line tool.
//
// Config document:
//   {"surface": {"name": str, "hO": [ints],
//                "bundles": {"L": {"h": [ints], "basis": [labels]}, "L2": ..., "A": ..., "LA": ...,
//                            "L2A": ..., "L2A2": ...},
//                "mults": [{"left": slot, "right": slot, "target": slot,
//                           "entries": [[i, j, k, "p/q"], ...]}],
//                "p2": {"d": int, "e": int}},
//    "query": {"mode": str, "n": int, "k": int}}
//
// A machine report carries "surface" and "query" verbatim, so it can be fed
// back as a config.

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "tautcoh/checker.hpp"
#include "tautcoh/formulas.hpp"
#include "tautcoh/surface.hpp"

namespace tautcoh::cli {

enum class Mode { SkTaut, S2N2, S2N3, S2Conjecture, SectionsTwisted, EulerK, TwistedBounds, Check };

std::string_view mode_name(Mode m) noexcept;
/// Throws ConfigParse.
Mode parse_mode(std::string_view name);

struct Query {
  std::optional<Mode> mode;
  std::optional<int> n;
  std::optional<int> k;

  /// Throws InvalidArgument when the mode or a mode-specific field is missing or out of range.
  void validate() const;
};

struct Config {
  nlohmann::json surface_json;
  surface::SurfaceData surface;
  Query query;
};

/// Throws ConfigParse on schema errors; surface errors (InvalidDims, ...) propagate.
surface::SurfaceData parse_surface(const nlohmann::json& j);
Config parse_config(const nlohmann::json& j);
Config load_config(const std::string& path);

/// Machine-format report. Arrays of dims are padded to at least 2n+1 degrees.
nlohmann::json compute_report(const Config& config);
nlohmann::json check_report(checker::Suite suite, const std::vector<checker::SuiteSection>& sections);

/// Human rendering of either kind of report.
std::string render_text(const nlohmann::json& report);

/// Entry point behind main(): 0 success, 1 config/usage error, 2 failed checks.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tautcoh::cli
