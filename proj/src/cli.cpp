#include "tautcoh/cli.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "tautcoh/error.hpp"

namespace tautcoh::cli {

using graded::GradedDim;
using nlohmann::json;
using surface::Slot;

namespace {

constexpr std::array<std::pair<Mode, std::string_view>, 8> kModes{{{Mode::SkTaut, "sk_taut"},
                                                                  {Mode::S2N2, "s2_n2"},
                                                                  {Mode::S2N3, "s2_n3"},
                                                                  {Mode::S2Conjecture, "s2_conjecture"},
                                                                  {Mode::SectionsTwisted, "sections_twisted"},
                                                                  {Mode::EulerK, "euler_K"},
                                                                  {Mode::TwistedBounds, "twisted_bounds"},
                                                                  {Mode::Check, "check"}}};

[[noreturn]] void schema_error(const std::string& what) { throw Error(ErrorKind::ConfigParse, what); }

int get_int(const json& j, const std::string& key) {
  if (!j.contains(key)) schema_error("missing integer field '" + key + "'");
  const auto& v = j.at(key);
  if (!v.is_number_integer()) schema_error("field '" + key + "' must be an integer");
  return v.get<int>();
}

GradedDim parse_dims(const json& j, const std::string& where) {
  if (!j.is_array()) schema_error(where + ": dims must be an array of integers");
  std::vector<std::uint64_t> d;
  for (const auto& x : j) {
    if (!x.is_number_integer()) schema_error(where + ": dims must be integers");
    if (x.get<long long>() < 0) throw Error(ErrorKind::InvalidDims, where + ": negative dimension");
    d.push_back(x.get<std::uint64_t>());
  }
  return GradedDim(std::move(d));
}

graded::BasisSpace parse_basis(const json& j, const std::string& where) {
  if (!j.is_array()) schema_error(where + ": basis must be an array of labels");
  std::vector<graded::BasisElement> elems;
  for (const auto& x : j) {
    if (!x.is_string()) schema_error(where + ": basis labels must be strings");
    elems.push_back({x.get<std::string>(), 0});
  }
  return graded::BasisSpace(std::move(elems));
}

Rational parse_coeff(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  schema_error("multiplication coefficient must be an integer or a \"p/q\" string");
}

json dims_json(const GradedDim& g, std::size_t pad) { return json(g.padded(pad)); }

json decomposition_json(const formulas::Decomposition& d, std::size_t pad) {
  json out;
  out["provenance"] = std::string(formulas::to_string(d.provenance));
  out["conjectural"] = d.conjectural;
  out["complete"] = d.complete();
  out["total"] = dims_json(d.total, pad);
  out["summands"] = json::array();
  for (const auto& s : d.summands) out["summands"].push_back({{"label", s.label}, {"dims", dims_json(s.dims, pad)}});
  if (d.residual) {
    const auto& r = *d.residual;
    json res{{"label", r.label}, {"euler", r.euler}, {"upper_bound", dims_json(r.upper_bound, pad)},
             {"reason", r.reason}};
    res["exact"] = r.exact ? dims_json(*r.exact, pad) : json(nullptr);
    out["residual"] = std::move(res);
  }
  return out;
}

std::string pad_left(const std::string& s, std::size_t w) { return s.size() >= w ? s : std::string(w - s.size(), ' ') + s; }
std::string pad_right(const std::string& s, std::size_t w) { return s.size() >= w ? s : s + std::string(w - s.size(), ' '); }

std::string render_check(const json& report) {
  std::ostringstream os;
  std::size_t total = 0;
  std::size_t failed = 0;
  for (const auto& sec : report.at("sections")) {
    std::size_t sec_failed = 0;
    for (const auto& o : sec.at("outcomes")) sec_failed += !o.at("passed").get<bool>();
    const std::size_t count = sec.at("outcomes").size();
    os << (sec_failed ? "[FAIL] " : "[PASS] ") << pad_right(sec.at("name").get<std::string>(), 28)
       << (count - sec_failed) << "/" << count << "\n";
    for (const auto& o : sec.at("outcomes")) {
      if (!o.at("passed").get<bool>()) {
        os << "       " << o.at("name").get<std::string>() << ": " << o.at("details").get<std::string>() << "\n";
      }
    }
    total += count;
    failed += sec_failed;
  }
  os << "suite " << report.at("suite").get<std::string>() << ": " << total << " checks, " << failed << " failed\n";
  return os.str();
}

std::string render_compute(const json& report) {
  std::ostringstream os;
  const auto& q = report.at("query");
  os << "mode " << q.at("mode").get<std::string>();
  if (q.contains("n")) os << "  n=" << q.at("n").get<int>();
  if (q.contains("k")) os << "  k=" << q.at("k").get<int>();
  os << "  surface " << report.at("surface_name").get<std::string>() << "\n";
  if (report.at("conjectural").get<bool>()) os << "CONJECTURAL: unproved general-n formula, not a theorem\n";

  if (report.contains("decomposition")) {
    const auto& d = report.at("decomposition");
    std::vector<std::pair<std::string, json>> rows;
    for (const auto& s : d.at("summands")) rows.emplace_back(s.at("label").get<std::string>(), s.at("dims"));
    rows.emplace_back(d.at("complete").get<bool>() ? "total" : "total (without K*)", d.at("total"));
    std::size_t label_w = 6;
    std::size_t cols = 0;
    for (const auto& [label, dims] : rows) {
      label_w = std::max(label_w, label.size());
      cols = std::max(cols, dims.size());
    }
    label_w += 2;
    constexpr std::size_t kCell = 7;
    os << pad_right("degree", label_w);
    for (std::size_t i = 0; i < cols; ++i) os << pad_left(std::to_string(i), kCell);
    os << "\n";
    for (const auto& [label, dims] : rows) {
      os << pad_right(label, label_w);
      for (const auto& x : dims) os << pad_left(std::to_string(x.get<std::uint64_t>()), kCell);
      os << "\n";
    }
    if (d.contains("residual")) {
      const auto& r = d.at("residual");
      os << "K*: euler characteristic " << r.at("euler").get<std::int64_t>() << ", degreewise upper bound "
         << r.at("upper_bound").dump() << "\n";
      os << "K*: " << (r.at("exact").is_null() ? "not determined" : "exact " + r.at("exact").dump()) << " ("
         << r.at("reason").get<std::string>() << ")\n";
    }
  }
  if (report.contains("kernel")) {
    const auto& k = report.at("kernel");
    os << "K0 = kernel of S^{n-1}H^0(A)(x)H^0(L2A) -> S^{n-2}H^0(A)(x)H^0(L2A2): domain "
       << k.at("domain_dim").get<std::size_t>() << ", codomain " << k.at("codomain_dim").get<std::size_t>()
       << ", rank " << k.at("rank").get<std::size_t>() << ", kernel " << k.at("kernel_dim").get<std::size_t>() << "\n";
  }
  if (report.contains("euler_K")) {
    const auto& l = report.at("les");
    os << "chi(K) = " << report.at("euler_K").get<std::int64_t>() << "   (middle " << l.at("middle").dump()
       << ", right " << l.at("right").dump() << ")\n";
  }
  return os.str();
}

void emit(const json& report, const std::string& format, const std::string& output, std::ostream& out) {
  if (format == "json") {
    out << report.dump(2) << "\n";
  } else {
    out << render_text(report);
  }
  if (!output.empty()) {
    std::ofstream f(output);
    if (!f) throw Error(ErrorKind::InvalidArgument, "cannot write '" + output + "'");
    f << report.dump(2) << "\n";
  }
}

bool all_passed(const std::vector<checker::SuiteSection>& sections) {
  for (const auto& s : sections) {
    for (const auto& o : s.outcomes) {
      if (!o.passed) return false;
    }
  }
  return true;
}

}  // namespace

std::string_view mode_name(Mode m) noexcept {
  for (const auto& [mode, name] : kModes) {
    if (mode == m) return name;
  }
  return "?";
}

Mode parse_mode(std::string_view name) {
  for (const auto& [mode, n] : kModes) {
    if (n == name) return mode;
  }
  schema_error("unknown mode '" + std::string(name) + "'");
}

void Query::validate() const {
  if (!mode) throw Error(ErrorKind::InvalidArgument, "no mode given (config 'query.mode' or --mode)");
  if (*mode == Mode::Check) return;
  if (!n) throw Error(ErrorKind::InvalidArgument, "mode " + std::string(mode_name(*mode)) + " needs n");
  if (*n < 2) throw Error(ErrorKind::InvalidArgument, "n must be at least 2");
  const bool only_23 = *mode == Mode::EulerK || *mode == Mode::TwistedBounds;
  if (only_23 && *n != 2 && *n != 3) {
    throw Error(ErrorKind::InvalidArgument, "mode " + std::string(mode_name(*mode)) + " is defined for n = 2, 3");
  }
  if (*mode == Mode::S2N2 && *n != 2) throw Error(ErrorKind::InvalidArgument, "mode s2_n2 needs n = 2");
  if (*mode == Mode::S2N3 && *n != 3) throw Error(ErrorKind::InvalidArgument, "mode s2_n3 needs n = 3");
  if (*mode == Mode::SkTaut && (!k || (*k != 0 && *k != 1))) {
    throw Error(ErrorKind::InvalidArgument, "mode sk_taut needs k = 0 or 1");
  }
}

surface::SurfaceData parse_surface(const json& j) {
  if (!j.is_object()) schema_error("'surface' must be an object");
  if (j.contains("p2")) {
    const auto& p = j.at("p2");
    auto s = surface::p2_surface(get_int(p, "d"), get_int(p, "e"));
    if (j.contains("name")) s.name = j.at("name").get<std::string>();
    return s;
  }

  std::map<Slot, GradedDim> dims;
  if (j.contains("hO")) dims[Slot::O] = parse_dims(j.at("hO"), "hO");
  const json bundles = j.value("bundles", json::object());
  if (!bundles.is_object()) schema_error("'bundles' must be an object");
  for (const auto& [key, b] : bundles.items()) {
    const Slot slot = surface::parse_slot(key);
    if (!b.is_object() || !b.contains("h")) schema_error("bundle " + key + " needs an 'h' array");
    dims[slot] = parse_dims(b.at("h"), key);
  }

  const std::string name = j.value("name", std::string("custom"));
  const bool is_preset = name == "rational_qpg0" || name == "K3" || name == "abelian";
  auto s = surface::preset_surface(is_preset ? name : "custom", dims);
  s.name = name;

  for (const auto& [key, b] : bundles.items()) {
    if (b.contains("basis")) s.bundles[surface::parse_slot(key)].basis = parse_basis(b.at("basis"), key);
  }
  for (const auto& m : j.value("mults", json::array())) {
    for (const char* f : {"left", "right", "target", "entries"}) {
      if (!m.contains(f)) schema_error(std::string("multiplication table needs '") + f + "'");
    }
    const Slot left = surface::parse_slot(m.at("left").get<std::string>());
    const Slot right = surface::parse_slot(m.at("right").get<std::string>());
    const Slot target = surface::parse_slot(m.at("target").get<std::string>());
    surface::MultTable table(s.basis(left), s.basis(right), s.basis(target));
    for (const auto& e : m.at("entries")) {
      if (!e.is_array() || e.size() != 4) schema_error("multiplication entries are [i, j, k, coeff]");
      table.add(e[0].get<std::size_t>(), e[1].get<std::size_t>(), e[2].get<std::size_t>(), parse_coeff(e[3]));
    }
    s.mults.push_back({left, right, target, std::move(table)});
  }
  s.validate();
  return s;
}

Config parse_config(const json& j) {
  if (!j.is_object()) schema_error("config must be a JSON object");
  Config c;
  if (j.contains("surface")) {
    c.surface_json = j.at("surface");
    c.surface = parse_surface(c.surface_json);
  }
  if (j.contains("query")) {
    const auto& q = j.at("query");
    if (q.contains("mode")) c.query.mode = parse_mode(q.at("mode").get<std::string>());
    if (q.contains("n")) c.query.n = get_int(q, "n");
    if (q.contains("k")) c.query.k = get_int(q, "k");
  }
  return c;
}

Config load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) schema_error("cannot open config '" + path + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    schema_error(path + ": " + e.what());
  }
  return parse_config(j);
}

json compute_report(const Config& config) {
  const auto& q = config.query;
  q.validate();
  if (config.surface_json.is_null()) schema_error("config has no 'surface'");
  const auto& s = config.surface;
  const int n = *q.n;
  const auto pad = static_cast<std::size_t>(2 * n + 1);

  json report;
  report["query"] = {{"mode", std::string(mode_name(*q.mode))}, {"n", n}};
  if (q.k) report["query"]["k"] = *q.k;
  report["surface"] = config.surface_json;
  report["surface_name"] = s.name;

  std::optional<formulas::Decomposition> dec;
  switch (*q.mode) {
    case Mode::SkTaut: {
      const auto& hA = s.bundle(Slot::A).h;
      const GradedDim hLA = *q.k == 1 ? s.bundle(Slot::LA).h : GradedDim{};
      dec = formulas::coh_sk_taut(n, *q.k, hA, hLA);
      break;
    }
    case Mode::S2N2:
      dec = formulas::coh_s2_n2(s.bundle(Slot::O).h, s.bundle(Slot::L).h, s.bundle(Slot::L2).h);
      break;
    case Mode::S2N3:
      dec = formulas::coh_s2_n3(s.bundle(Slot::O).h, s.bundle(Slot::L).h, s.bundle(Slot::L2).h);
      break;
    case Mode::S2Conjecture:
      dec = formulas::coh_s2_conjecture(n, s.bundle(Slot::O).h, s.bundle(Slot::L).h, s.bundle(Slot::L2).h);
      break;
    case Mode::SectionsTwisted: {
      auto r = formulas::sections_s2_twisted(n, s);
      report["kernel"] = {{"domain_dim", r.kernel.domain_dim},
                          {"codomain_dim", r.kernel.codomain_dim},
                          {"rank", r.kernel.rank},
                          {"kernel_dim", r.kernel.kernel_dim}};
      dec = std::move(r.decomposition);
      break;
    }
    case Mode::EulerK: {
      const auto& hA = s.bundle(Slot::A).h;
      const auto& hL2A = s.bundle(Slot::L2A).h;
      const auto& hL2A2 = s.bundle(Slot::L2A2).h;
      const auto terms = formulas::les_terms(n, hA, hL2A, hL2A2);
      report["euler_K"] = formulas::euler_K_twisted(n, hA, hL2A, hL2A2);
      report["les"] = {{"middle", dims_json(terms.middle, pad)}, {"right", dims_json(terms.right, pad)}};
      break;
    }
    case Mode::TwistedBounds:
      dec = formulas::coh_s2_twisted_bounds(n, s);
      break;
    case Mode::Check:
      break;
  }
  report["conjectural"] = dec && dec->conjectural;
  if (dec) {
    std::size_t width = pad;
    for (const auto& sm : dec->summands) width = std::max(width, sm.dims.length());
    width = std::max(width, dec->total.length());
    report["decomposition"] = decomposition_json(*dec, width);
  }
  return report;
}

json check_report(checker::Suite suite, const std::vector<checker::SuiteSection>& sections) {
  json report;
  report["suite"] = suite == checker::Suite::Full ? "full" : "default";
  report["passed"] = all_passed(sections);
  report["sections"] = json::array();
  for (const auto& sec : sections) {
    json outcomes = json::array();
    for (const auto& o : sec.outcomes) outcomes.push_back({{"name", o.name}, {"passed", o.passed}, {"details", o.details}});
    report["sections"].push_back({{"name", sec.name}, {"outcomes", std::move(outcomes)}});
  }
  return report;
}

std::string render_text(const json& report) {
  return report.contains("suite") ? render_check(report) : render_compute(report);
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"tautcoh: cohomology of S^2 of tautological bundles on Hilbert schemes of points"};
  app.require_subcommand(1);

  std::string config_path, mode, output, format = "text", suite = "default";
  std::optional<int> n, k;

  auto* compute = app.add_subcommand("compute", "Evaluate a decomposition for a surface config");
  compute->add_option("--config", config_path, "Config JSON (a previous machine report also works)")->required();
  compute->add_option("--mode", mode, "sk_taut, s2_n2, s2_n3, s2_conjecture, sections_twisted, euler_K, twisted_bounds, check");
  compute->add_option("--n", n, "Number of points");
  compute->add_option("--k", k, "Symmetric power for sk_taut (0 or 1)");
  compute->add_option("--output", output, "Also write the JSON report to this path");
  compute->add_option("--format", format, "stdout format")->check(CLI::IsMember({"json", "text"}));

  auto* check = app.add_subcommand("check", "Run the consistency suite");
  check->add_option("--suite", suite, "default or full")->check(CLI::IsMember({"default", "full"}));
  check->add_option("--output", output, "Also write the JSON outcome list to this path");
  check->add_option("--format", format, "stdout format")->check(CLI::IsMember({"json", "text"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 1;
  }

  try {
    auto run_checks = [&](checker::Suite which) {
      const auto sections = checker::run_suite(which);
      emit(check_report(which, sections), format, output, out);
      return all_passed(sections) ? 0 : 2;
    };
    if (check->parsed()) return run_checks(suite == "full" ? checker::Suite::Full : checker::Suite::Default);

    Config config = load_config(config_path);
    if (!mode.empty()) config.query.mode = parse_mode(mode);
    if (n) config.query.n = n;
    if (k) config.query.k = k;
    if (config.query.mode == Mode::Check) return run_checks(checker::Suite::Default);
    emit(compute_report(config), format, output, out);
    return 0;
  } catch (const Error& e) {
    err << "tautcoh: " << e.what() << "\n";
    return 1;
  } catch (const json::exception& e) {
    err << "tautcoh: ConfigParse: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace tautcoh::cli
