#include "arrowpoly_cli/cli.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <atomic>
#include <mutex>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "arrowpoly/analysis.hpp"
#include "arrowpoly/cabling.hpp"
#include "arrowpoly/homology.hpp"
#include "arrowpoly/whisker_engine.hpp"

namespace arrowpoly::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

/// Input problems that are not PD syntax errors (missing files, bad tables).
class InputError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct InputOptions {
  bool mod10 = false;
  std::string labels_file;
};

/// Sidecar labels: a JSON object from arc id to label. Explicit labels win
/// over mod-10 ones component by component.
PDCode apply_labels(const PDCode& pd, const std::string& file) {
  const json j = json::parse(slurp(file), nullptr, false);
  if (!j.is_object()) throw InputError(file + ": expected a JSON object mapping arc ids to labels");
  std::map<int, int> explicit_labels;
  for (const auto& [k, v] : j.items()) {
    if (!v.is_number_integer() || v.get<int>() < 1) throw InputError(file + ": label for arc " + k + " must be a positive integer");
    try {
      explicit_labels[std::stoi(k)] = v.get<int>();
    } catch (const std::exception&) {
      throw InputError(file + ": bad arc id '" + k + "'");
    }
  }
  std::map<int, int> base;
  if (pd.component_labels()) base = pd.arc_labels();
  std::map<int, int> merged;
  for (const auto& comp : pd.components()) {
    std::optional<int> chosen;
    for (int a : comp.arcs) {
      auto it = explicit_labels.find(a);
      if (it == explicit_labels.end()) continue;
      if (chosen && *chosen != it->second) throw ValidationError("conflicting labels on one component", a);
      chosen = it->second;
    }
    for (int a : comp.arcs) {
      if (chosen) merged[a] = *chosen;
      else if (base.count(a)) merged[a] = base.at(a);
    }
  }
  return pd.with_arc_labels(merged);
}

PDCode load_pd(const std::string& path, const InputOptions& in = {}) {
  PDCode pd = parse_pd(slurp(path), ParseOptions{in.mod10});
  if (!in.labels_file.empty()) pd = apply_labels(pd, in.labels_file);
  return pd;
}

void emit(std::ostream& out, const std::string& format, const std::string& kind, const HArrowPoly& p, VarStyle style,
          json extra = json::object()) {
  if (format == "json") {
    json j = std::move(extra);
    j["kind"] = kind;
    j["polynomial"] = canonical_string(p, style);
    j["terms"] = to_json(p, style);
    out << j.dump(2) << "\n";
  } else {
    out << canonical_string(p, style) << "\n";
  }
}

std::vector<int> parse_cables(const std::string& spec) {
  std::vector<int> ns;
  std::stringstream ss(spec);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    int n = 0;
    try {
      n = std::stoi(tok);
    } catch (const std::exception&) {
      throw CLI::ValidationError("--cables", "bad entry '" + tok + "'");
    }
    if (n < 1) throw CLI::ValidationError("--cables", "cable widths must be positive");
    ns.push_back(n);
  }
  if (ns.empty()) throw CLI::ValidationError("--cables", "empty list");
  std::sort(ns.begin(), ns.end());
  ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
  return ns;
}

std::map<int, std::string> cable_strings(const PDCode& pd, const std::vector<int>& cables, const CableOptions& opts) {
  std::map<int, std::string> r;
  for (int n : cables) r[n] = canonical_string(cabled_arrow(pd, n, opts), VarStyle::K);
  return r;
}

// ---- commands ------------------------------------------------------------

struct ComputeArgs {
  std::string file;
  bool arrow = false, harrow = false, aprime = false, normalized = false;
  InputOptions input;
  std::string format = "text";
};

int cmd_compute(const ComputeArgs& a, const EngineOptions& eo, std::ostream& out) {
  const PDCode pd = load_pd(a.file, a.input);
  if (a.harrow || a.aprime) {
    HArrowPoly p = compute_harrow(pd, a.aprime ? LoopWeight::XOnly : LoopWeight::DeltaX, eo);
    if (a.normalized) p = writhe_normalize(p, writhe(pd));
    emit(out, a.format, a.aprime ? "aprime" : "harrow", p, VarStyle::X);
    return kOk;
  }
  const HArrowPoly p = a.normalized ? compute_arrow_normalized(pd, eo) : compute_arrow(pd, eo);
  emit(out, a.format, a.normalized ? "arrow-normalized" : "arrow", p, VarStyle::K);
  return kOk;
}

int cmd_cable(const std::string& file, int n, bool stats, const std::string& format, const EngineOptions& eo,
              std::ostream& out, std::ostream& err) {
  const PDCode pd = load_pd(file);
  EngineStats st;
  const auto t0 = std::chrono::steady_clock::now();
  const HArrowPoly p = cabled_arrow(pd, n, CableOptions{eo, true}, &st);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  json extra = json::object();
  extra["n"] = n;
  emit(out, format, "cabled-arrow", p, VarStyle::K, extra);
  // Timing is not deterministic, so it stays out of the data stream.
  if (stats) err << "elapsed_s " << secs << "\npeak_states " << st.peak_states << "\npeak_frontier " << st.peak_frontier
                 << "\nsteps " << st.steps << "\n";
  return kOk;
}

int cmd_check(const std::string& file, const std::string& format, const EngineOptions& eo, std::ostream& out) {
  const PDCode pd = load_pd(file);
  const FaceData fd = faces_and_genus(pd);
  const NumberingDefect defect = dehn_defect(pd, fd);
  const DehnResult z2 = solve_dehn(pd, fd, 2);
  const HArrowPoly arrow = compute_arrow(pd, eo);
  const BoundReport br = bound_report(arrow);
  const NullhomologyReport nh = nullhomology_necessary(arrow);

  json j;
  j["crossings"] = pd.crossing_count();
  j["components"] = pd.components().size();
  j["embedding_genus"] = fd.genus();
  j["dehn_defect"] = defect.d;
  j["z_numbering"] = defect.d == 0;
  if (z2.numbering) {
    j["checkerboard"] = "coloring";
    j["coloring"] = z2.numbering->values;
  } else {
    j["checkerboard"] = "none";
    json steps = json::array();
    for (const auto& s : z2.witness->steps) steps.push_back({{"arc", s.arc}, {"from", s.from}, {"to", s.to}, {"step", s.increment}});
    j["witness_cycle"] = {{"steps", steps}, {"sum", z2.witness->total}};
  }
  j["arrow"] = canonical_string(arrow, VarStyle::K);
  j["genus_lb"] = br.genus_lb;
  j["crossing_lb"] = br.crossing_lb;
  j["checkerboard_obstruction"] = br.checkerboard.obstructed ? "obstructed" : "not excluded";
  if (br.checkerboard.obstructed) {
    j["obstruction_monomial"] = monomial_string(*br.checkerboard.monomial, VarStyle::K);
    j["obstruction_reason"] = br.checkerboard.reason;
  }
  j["arrow_trivial"] = br.arrow_trivial;
  j["z_nullhomology_excluded"] = !nh.allows(0);
  j["index_gcd"] = nh.index_gcd;

  if (format == "json") {
    out << j.dump(2) << "\n";
    return kOk;
  }
  out << "crossings: " << j["crossings"] << "\n";
  out << "components: " << j["components"] << "\n";
  out << "embedding genus: " << fd.genus() << "\n";
  out << "dehn defect: " << defect.d << (defect.d == 0 ? " (Z numbering exists)" : "") << "\n";
  if (z2.numbering) {
    out << "checkerboard: coloring";
    for (auto v : z2.numbering->values) out << " " << v;
    out << "\n";
  } else {
    out << "checkerboard: none (face cycle with step sum " << z2.witness->total << ":";
    for (const auto& s : z2.witness->steps) out << " " << s.from << "->" << s.to << "@" << s.arc;
    out << ")\n";
  }
  out << "arrow: " << j["arrow"].get<std::string>() << "\n";
  out << "genus_lb: " << br.genus_lb << "\n";
  out << "crossing_lb: " << br.crossing_lb << "\n";
  out << "checkerboard_obstruction: " << j["checkerboard_obstruction"].get<std::string>();
  if (br.checkerboard.obstructed) out << " (" << j["obstruction_monomial"].get<std::string>() << ": " << br.checkerboard.reason << ")";
  out << "\n";
  out << "arrow_trivial: " << (br.arrow_trivial ? "true" : "false") << "\n";
  out << "Z-nullhomology: " << (nh.allows(0) ? "not excluded" : "excluded") << "\n";
  out << "note: numbering data certify this diagram's embedding only\n";
  return kOk;
}

int cmd_table_build(const std::string& dir, const std::string& cables_spec, const std::string& out_file,
                    const EngineOptions& eo, std::ostream& out) {
  const auto cables = parse_cables(cables_spec);
  if (!fs::is_directory(dir)) throw InputError(dir + " is not a directory");
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ".pd") files.push_back(e.path());
  std::sort(files.begin(), files.end());

  // Workers pull diagrams by index; results land in name order regardless of
  // timing. The first failure is rethrown after all workers stop.
  const CableOptions co{eo, true};
  std::vector<std::map<int, std::string>> results(files.size());
  std::atomic<std::size_t> next{0};
  std::mutex fail_mu;
  std::exception_ptr failure;
  auto worker = [&] {
    for (std::size_t i; (i = next++) < files.size();) {
      try {
        results[i] = cable_strings(load_pd(files[i].string()), cables, co);
      } catch (...) {
        std::lock_guard<std::mutex> lock(fail_mu);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const std::size_t nthreads = std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, std::max<std::size_t>(files.size(), 1));
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < nthreads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  json entries = json::object();
  for (std::size_t i = 0; i < files.size(); ++i) {
    json e = json::object();
    for (const auto& [n, s] : results[i]) e[std::to_string(n)] = s;
    entries[files[i].stem().string()] = e;
  }
  json table = {{"cables", cables}, {"entries", entries}};
  std::ofstream os(out_file);
  if (!os) throw InputError("cannot write " + out_file);
  os << table.dump(2) << "\n";
  out << "wrote " << files.size() << " entries to " << out_file << "\n";
  return kOk;
}

int cmd_identify(const std::string& file, const std::string& table_file, const EngineOptions& eo, std::ostream& out) {
  const json table = json::parse(slurp(table_file), nullptr, false);
  if (!table.is_object() || !table.contains("cables") || !table.contains("entries"))
    throw InputError(table_file + ": not an invariant table");
  const auto cables = table["cables"].get<std::vector<int>>();
  const PDCode pd = load_pd(file);
  std::map<int, HArrowPoly> mine;
  for (int n : cables) mine[n] = cabled_arrow(pd, n, CableOptions{eo, true});

  std::vector<std::string> hits;
  for (const auto& [name, e] : table["entries"].items()) {
    bool same = true, mirror = true;
    for (int n : cables) {
      const auto key = std::to_string(n);
      if (!e.contains(key)) throw InputError(table_file + ": entry " + name + " lacks cable " + key);
      const HArrowPoly stored = parse_poly(e[key].get<std::string>());
      same = same && stored == mine[n];
      mirror = mirror && stored == mirror_subst(mine[n]);
    }
    if (same) hits.push_back(name);
    else if (mirror) hits.push_back(name + " (mirror)");
  }
  if (hits.empty()) out << "unknown\n";
  for (const auto& h : hits) out << h << "\n";
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Arrow and homological arrow polynomials of virtual links"};
  app.require_subcommand(1);
  std::size_t max_states = EngineOptions{}.max_states;
  app.add_option("--max-states", max_states, "Live state cap before giving up")->check(CLI::PositiveNumber);

  ComputeArgs ca;
  auto* compute = app.add_subcommand("compute", "Compute a polynomial of a PD file");
  compute->add_option("file", ca.file)->required();
  auto* f_arrow = compute->add_flag("--arrow", ca.arrow, "Arrow polynomial (default)");
  auto* f_harrow = compute->add_flag("--harrow", ca.harrow, "Homological arrow polynomial");
  auto* f_aprime = compute->add_flag("--aprime", ca.aprime, "The variant without loop factors on nontrivial loops");
  f_arrow->excludes(f_harrow)->excludes(f_aprime);
  f_harrow->excludes(f_aprime);
  compute->add_flag("--normalized", ca.normalized, "Apply the writhe normalization");
  compute->add_flag("--mod10", ca.input.mod10, "Component label = arc id mod 10");
  compute->add_option("--labels", ca.input.labels_file, "JSON object from arc id to label")->check(CLI::ExistingFile);
  compute->add_option("--format", ca.format)->check(CLI::IsMember({"text", "json"}));

  std::string cable_file, cable_format = "text";
  int cable_n = 1;
  bool cable_stats = false;
  auto* cable = app.add_subcommand("cable", "n-cabled arrow polynomial of the 0-framing");
  cable->add_option("file", cable_file)->required();
  cable->add_option("-n", cable_n, "Cable width")->required()->check(CLI::PositiveNumber);
  cable->add_flag("--stats", cable_stats, "Report time and peak state counts on stderr");
  cable->add_option("--format", cable_format)->check(CLI::IsMember({"text", "json"}));

  std::string check_file, check_format = "text";
  auto* check = app.add_subcommand("check", "Embedding genus, Dehn numbering and polynomial bounds");
  check->add_option("file", check_file)->required();
  check->add_option("--format", check_format)->check(CLI::IsMember({"text", "json"}));

  std::string table_dir, table_cables = "1,2", table_out;
  auto* table = app.add_subcommand("table", "Invariant tables");
  table->require_subcommand(1);
  auto* build = table->add_subcommand("build", "Tabulate cabled arrow polynomials of every .pd file in DIR");
  build->add_option("dir", table_dir)->required();
  build->add_option("--cables", table_cables, "Comma-separated cable widths");
  build->add_option("-o", table_out)->required();

  std::string id_file, id_table;
  auto* identify = app.add_subcommand("identify", "Look a diagram up in an invariant table");
  identify->add_option("file", id_file)->required();
  identify->add_option("--table", id_table)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  EngineOptions eo;
  eo.max_states = max_states;
  try {
    if (*compute) return cmd_compute(ca, eo, out);
    if (*cable) return cmd_cable(cable_file, cable_n, cable_stats, cable_format, eo, out, err);
    if (*check) return cmd_check(check_file, check_format, eo, out);
    if (*build) return cmd_table_build(table_dir, table_cables, table_out, eo, out);
    if (*identify) return cmd_identify(id_file, id_table, eo, out);
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInput;
  } catch (const ValidationError& e) {
    err << "error: invalid diagram: " << e.what() << "\n";
    return kInput;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInput;
  } catch (const ResourceError& e) {
    err << "error: resource cap: " << e.what() << "\n";
    return kResource;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInput;
  }
  return kUsage;
}

}  // namespace arrowpoly::cli
