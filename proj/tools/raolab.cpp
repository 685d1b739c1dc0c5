// raolab: reproduce tables, analyze configurations, audit the two engines.
// Exit codes: 0 ok, 1 mathematical mismatch, 2 usage error, 3 budget exceeded.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "raolab/constructors.hpp"
#include "raolab/ideal.hpp"
#include "raolab/lefschetz.hpp"
#include "raolab/reproduce.hpp"

#ifndef RAOLAB_DATA_DIR
#define RAOLAB_DATA_DIR "data"
#endif

namespace fs = std::filesystem;
using nlohmann::json;
using namespace raolab;

namespace {

constexpr int kOk = 0, kMismatch = 1, kUsage = 2, kBudget = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::uint32_t prime = kDefaultPrime;
  std::uint32_t second_prime = 0;
  std::uint64_t seed = 1;
  int trials = 5;
  std::uint64_t budget = 0;
  std::string out;
  std::string format = "json";
  std::string goldens = std::string(RAOLAB_DATA_DIR) + "/goldens.json";
};

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw UsageError(path + ": " + e.what());
  }
}

// write-temp-then-rename
void write_atomic(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) throw UsageError("cannot write " + tmp.string());
    out << text;
  }
  fs::rename(tmp, path);
}

void emit(const Globals& g, const std::string& name, const json& j, const std::string& md) {
  const std::string body = g.format == "md" ? md : j.dump(2) + "\n";
  if (g.out.empty()) {
    std::cout << body;
    return;
  }
  const fs::path path = fs::path(g.out) / (name + (g.format == "md" ? ".md" : ".json"));
  write_atomic(path, body);
  std::cerr << "wrote " << path.string() << "\n";
}

std::vector<FieldSpec> fields(const Globals& g) {
  std::vector<FieldSpec> out{FieldSpec(g.prime)};
  if (g.second_prime != 0) out.emplace_back(g.second_prime);
  return out;
}

// --- reproduce --------------------------------------------------------------

int cmd_reproduce(const Globals& g, const std::string& tag) {
  const json goldens = read_json_file(g.goldens);
  std::vector<std::string> tags;
  if (tag == "all") {
    tags = reproduction_tags();
  } else {
    const auto known = reproduction_tags();
    if (std::find(known.begin(), known.end(), tag) == known.end()) {
      std::string list;
      for (const auto& t : known) list += " " + t;
      throw UsageError("unknown tag '" + tag + "'; known:" + list);
    }
    tags = {tag};
  }
  json report = json::object();
  std::ostringstream md;
  bool all_ok = true;
  for (const auto& t : tags) {
    json runs = json::array();
    json first;
    for (const auto& f : fields(g)) {
      const json computed = run_reproduction(t, {f, g.seed, g.trials});
      std::vector<std::string> diffs;
      for (const auto& [key, entry] : goldens.items()) {
        if (entry.value("tag", key) != t) continue;
        auto d = golden_diff(computed, entry.at("expected"));
        for (auto& s : d) s = key + " [" + entry.value("source", "?") + "] " + s;
        diffs.insert(diffs.end(), d.begin(), d.end());
      }
      if (first.is_null()) {
        first = computed;
      } else if (computed != first) {
        diffs.push_back("primes disagree: " + computed.dump() + " vs " + first.dump());
      }
      all_ok = all_ok && diffs.empty();
      runs.push_back({{"prime", f.p()}, {"computed", computed}, {"diffs", diffs}, {"match", diffs.empty()}});
      md << "### " << t << " (p = " << f.p() << "): " << (diffs.empty() ? "match" : "MISMATCH") << "\n\n";
      md << "`" << computed.dump() << "`\n";
      for (const auto& s : diffs) {
        md << "- " << s << "\n";
        std::cerr << t << ": " << s << "\n";
      }
      md << "\n";
    }
    report[t] = {{"seed", g.seed}, {"runs", runs}};
  }
  emit(g, tag == "all" ? "reproduce-all" : "reproduce-" + tag, report, md.str());
  return all_ok ? kOk : kMismatch;
}

// --- analyze ----------------------------------------------------------------

std::vector<int> read_powers(const json& manifest) {
  if (!manifest.contains("m")) return {1};
  const auto& m = manifest.at("m");
  if (m.is_number_integer()) return {m.get<int>()};
  return m.get<std::vector<int>>();
}

int cmd_analyze(const Globals& g, const std::string& path) {
  const json manifest = read_json_file(path);
  const std::uint64_t seed = manifest.value("seed", g.seed);
  const int trials = manifest.value("trials", g.trials);
  std::vector<FieldSpec> fs_list;
  if (manifest.contains("primes")) {
    for (auto p : manifest.at("primes")) fs_list.emplace_back(p.get<std::uint32_t>());
  } else {
    fs_list = fields(g);
  }
  const auto powers = read_powers(manifest);
  json runs = json::array();
  std::ostringstream md;
  for (const auto& f : fs_list) {
    Configuration cfg;
    if (manifest.contains("config")) {
      json c = manifest.at("config");
      c["p"] = f.p();
      cfg = configuration_from_json(c);
    } else {
      if (!manifest.contains("recipe")) throw UsageError("manifest needs \"recipe\" or \"config\"");
      try {
        cfg = from_recipe(manifest.at("recipe").get<std::string>(), manifest.value("params", json::object()), seed, f);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
    }
    RaoProfile prof = rao_profile(cfg);
    fill_socle(prof);
    json reports = json::array();
    md << "## " << (cfg.recipe.empty() ? "configuration" : cfg.recipe) << " " << cfg.params.dump()
       << " (p = " << f.p() << ", seed " << seed << ")\n\n" << to_markdown(prof) << "\n";
    for (int m : powers) {
      const auto rep = slp_range_verdict(prof, m, {trials, split_seed(seed, 500 + m), false});
      reports.push_back(to_json(rep));
      md << to_markdown(rep) << "\n";
    }
    runs.push_back({{"prime", f.p()}, {"configuration", to_json(cfg)}, {"profile", to_json(prof)}, {"reports", reports}});
  }
  json out{{"manifest", manifest}, {"runs", runs}};
  if (runs.size() > 1) {
    bool agree = true;
    for (std::size_t i = 1; i < runs.size(); ++i) {
      agree = agree && runs[i]["profile"]["dims"] == runs[0]["profile"]["dims"];
      for (std::size_t k = 0; k < runs[0]["reports"].size(); ++k) {
        agree = agree && runs[i]["reports"][k]["verdict"] == runs[0]["reports"][k]["verdict"];
      }
    }
    out["agreement"] = agree;
    md << "Prime agreement: " << (agree ? "yes" : "**no**") << "\n";
  }
  emit(g, "analyze-" + fs::path(path).stem().string(), out, md.str());
  return out.value("agreement", true) ? kOk : kMismatch;
}

// --- audit ------------------------------------------------------------------

int cmd_audit(const Globals& g, int max_r, int max_t) {
  if (max_r > 6 || max_t > 8) throw UsageError("audit bounds are r <= 6, t <= 8");
  json out = json::array();
  std::ostringstream md;
  bool clean = true;
  for (const auto& f : fields(g)) {
    const auto rep = cross_engine_audit(max_r, max_t, g.seed, f);
    clean = clean && rep.discrepancies.empty();
    json j = to_json(rep);
    j["prime"] = f.p();
    out.push_back(j);
    md << "Audit p = " << f.p() << ": " << rep.cases << " configurations, " << rep.comparisons
       << " comparisons, " << rep.discrepancies.size() << " discrepancies\n";
    for (const auto& d : rep.discrepancies) {
      md << "- " << d.what << " t=" << d.t << " m=" << d.m << ": restriction " << d.restriction << ", groebner "
         << d.groebner << "\n";
    }
  }
  emit(g, "audit", out, md.str());
  return clean ? kOk : kMismatch;
}

// --- scan -------------------------------------------------------------------

int cmd_scan(const Globals& g, const std::string& path) {
  json spec = read_json_file(path);
  if (!spec.contains("trials")) spec["trials"] = g.trials;
  if (!spec.contains("seed")) spec["seed"] = g.seed;
  json cells = json::array();
  std::ostringstream md;
  md << "| cell | result |\n|---|---|\n";
  for (const auto& f : fields(g)) {
    std::vector<ScanCell> res;
    try {
      res = conjecture_scan(spec, f);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    for (const auto& c : res) {
      json e{{"prime", f.p()}, {"key", c.key}};
      if (c.error) {
        e["error"] = *c.error;
      } else {
        e["result"] = c.result;
      }
      cells.push_back(e);
      std::string summary;
      if (c.error) {
        summary = "error: " + *c.error;
      } else if (c.result.contains("verdict")) {
        summary = c.result["verdict"].get<std::string>();
      } else {
        summary = c.result["generic"].get<bool>() ? "generic" : "not generic";
      }
      md << "| " << c.key.dump() << " p=" << f.p() << " | " << summary << " |\n";
    }
  }
  emit(g, "scan-" + fs::path(path).stem().string(), json{{"spec", spec}, {"cells", cells}}, md.str());
  return kOk;
}

template <class T>
void env_default(const char* name, T& target) {
  if (const char* v = std::getenv(name)) {
    try {
      target = static_cast<T>(std::stoull(v));
    } catch (const std::exception&) {
      throw UsageError(std::string(name) + " is not a number: " + v);
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  Globals g;
  try {
    env_default("RAOLAB_PRIME", g.prime);
    env_default("RAOLAB_SEED", g.seed);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }

  CLI::App app{"Hartshorne-Rao module workbench"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--prime", g.prime, "field characteristic");
  app.add_option("--second-prime", g.second_prime, "also run over this prime and compare");
  app.add_option("--seed", g.seed, "base seed");
  app.add_option("--trials", g.trials, "random linear forms per verdict")->check(CLI::PositiveNumber);
  app.add_option("--budget", g.budget, "S-pair budget for Groebner computations");
  app.add_option("--out", g.out, "output directory (stdout if absent)");
  app.add_option("--format", g.format, "json or md")->check(CLI::IsMember({"json", "md"}));
  app.add_option("--goldens", g.goldens, "golden values file");

  std::string tag, manifest, scanspec;
  int max_r = 6, max_t = 8;
  auto* reproduce = app.add_subcommand("reproduce", "run a tagged pipeline and diff against the goldens");
  reproduce->add_option("tag", tag, "tag, or 'all'")->required();
  auto* analyze = app.add_subcommand("analyze", "profile and verdicts for a manifest");
  analyze->add_option("manifest", manifest)->required();
  auto* audit = app.add_subcommand("audit", "compare the restriction and Groebner routes");
  audit->add_option("--max-r", max_r)->check(CLI::NonNegativeNumber);
  audit->add_option("--max-t", max_t)->check(CLI::NonNegativeNumber);
  auto* scan = app.add_subcommand("scan", "tabulate verdicts over ranges");
  scan->add_option("scanspec", scanspec)->required();
  auto* tags = app.add_subcommand("tags", "list reproduction tags and recipes");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    (void)FieldSpec(g.prime);
    if (g.second_prime != 0) (void)FieldSpec(g.second_prime);
    if (g.budget != 0) set_default_reduction_budget(g.budget);
    if (*reproduce) return cmd_reproduce(g, tag);
    if (*analyze) return cmd_analyze(g, manifest);
    if (*audit) return cmd_audit(g, max_r, max_t);
    if (*scan) return cmd_scan(g, scanspec);
    if (*tags) {
      for (const auto& t : reproduction_tags()) std::cout << "tag     " << t << "\n";
      for (const auto& r : recipe_names()) std::cout << "recipe  " << r << "\n";
      return kOk;
    }
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const FieldError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const InternalInconsistency& e) {
    std::cerr << "internal inconsistency: " << e.what() << "\n";
    return kMismatch;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kMismatch;
  }
  return kUsage;
}
