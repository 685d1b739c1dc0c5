#include "raolab/lefschetz.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

#include "raolab/constructors.hpp"

namespace raolab {

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Holds:
      return "holds";
    case Verdict::Fails:
      return "fails";
    case Verdict::Vacuous:
      return "vacuous";
  }
  return "?";
}

namespace {

std::int64_t dim_forms(const RingSpec& ring, int t) {
  return t < 0 ? 0 : static_cast<std::int64_t>(binomial(t + ring.n_vars - 1, ring.n_vars - 1));
}

std::vector<Fp> sample_form(const FieldSpec& f, int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_linear_form(f, n, rng);
}

}  // namespace

bool shortcut_certifies(const Configuration& cfg, const std::vector<Fp>& L, int m, int t) {
  const Scheme z = section_scheme(cfg, L, m);
  const std::int64_t in_ideal = ideal_dimension(z, t);
  if (in_ideal == dim_forms(cfg.ambient, t - m)) return true;  // nothing beyond L^m multiples
  const std::int64_t h1 = *z.degree() - (dim_forms(cfg.ambient, t) - in_ideal);
  return h1 == 0;
}

LefschetzReport slp_range_verdict(const RaoProfile& profile, int m, const VerdictOptions& opt) {
  if (m < 1) throw std::invalid_argument("power m must be at least 1");
  if (opt.trials < 1) throw std::invalid_argument("trials must be at least 1");
  const Configuration& cfg = profile.presentation->config();
  LefschetzReport rep;
  rep.recipe = cfg.recipe;
  rep.m = m;
  // Window: degrees whose source or target is nonzero.
  for (int t = 0; t <= profile.horizon + m; ++t) {
    RankRow row;
    row.t = t;
    row.dim_src = profile.dim(t - m);
    row.dim_tgt = profile.dim(t);
    if (row.dim_src + row.dim_tgt == 0) continue;
    row.rank = -1;
    rep.rows.push_back(row);
  }
  auto want = [](const RankRow& r) { return std::min(r.dim_src, r.dim_tgt); };
  for (auto& row : rep.rows) {
    if (want(row) == 0) {
      row.rank = 0;
      row.maximal = true;
    }
  }
  const bool any_real = std::any_of(rep.rows.begin(), rep.rows.end(), [&](const RankRow& r) { return want(r) > 0; });
  if (!any_real) {
    rep.verdict = Verdict::Vacuous;
    return rep;
  }
  const auto& f = cfg.ambient.field;
  for (int k = 0; k < opt.trials; ++k) {
    Sample s;
    s.seed = split_seed(opt.seed, static_cast<std::uint64_t>(k));
    s.form = sample_form(f, cfg.ambient.n_vars, s.seed);
    rep.samples.push_back(s);
    bool done = true;
    for (auto& row : rep.rows) {
      if (want(row) == 0 || (row.maximal && row.rank >= 0)) continue;
      if (opt.use_shortcut && shortcut_certifies(cfg, s.form, m, row.t)) {
        row.rank = want(row);
        row.by_shortcut = true;
      } else {
        row.rank = std::max(row.rank, multiplication_rank(profile, s.form, m, row.t).rank);
      }
      row.maximal = row.rank == want(row);
      done = done && row.maximal;
    }
    if (done) break;
  }
  for (const auto& row : rep.rows) {
    if (!row.maximal) rep.failing_degrees.push_back(row.t);
  }
  rep.verdict = rep.failing_degrees.empty() ? Verdict::Holds : Verdict::Fails;
  rep.probabilistic = rep.verdict == Verdict::Fails;
  return rep;
}

LefschetzReport slp_range_verdict(const Configuration& cfg, int m, const VerdictOptions& opt) {
  return slp_range_verdict(rao_profile(cfg), m, opt);
}

LefschetzReport wlp_verdict(const Configuration& cfg, const VerdictOptions& opt) {
  return slp_range_verdict(cfg, 1, opt);
}

std::optional<bool> ruling_lines_injectivity_check(const RaoProfile& profile, const VerdictOptions& opt) {
  const auto support = profile.support();
  if (!support) return true;
  const int top = support->second;
  for (int t = 0; t <= top; ++t) {
    if (profile.dim(t) != profile.dim(top - t)) return std::nullopt;
  }
  const Configuration& cfg = profile.presentation->config();
  const auto& f = cfg.ambient.field;
  for (int t = 1; t <= top / 2; ++t) {
    bool injective = false;
    for (int k = 0; k < opt.trials && !injective; ++k) {
      const auto L = sample_form(f, cfg.ambient.n_vars, split_seed(opt.seed, static_cast<std::uint64_t>(k)));
      injective = multiplication_rank(profile, L, 1, t).rank == profile.dim(t - 1);
    }
    if (!injective) return false;
  }
  return true;
}

HVector h_vector_of_section(const Configuration& cfg, const std::vector<Fp>& L, int m) {
  if (m < 1) throw std::invalid_argument("multiplicity must be at least 1");
  const Scheme z = m == 1 ? plane_section_scheme(cfg, L) : section_scheme(cfg, L, m);
  return {h_vector(z), *z.degree()};
}

FlatFatReport genericity_test_flatfat(int s, int m, int trials, std::uint64_t seed, FieldSpec f) {
  FlatFatReport rep;
  rep.s = s;
  rep.m = m;
  const std::int64_t total = static_cast<std::int64_t>(s) * m;
  for (int j = 0;; ++j) {
    rep.expected.push_back(std::min<std::int64_t>(total, binomial(j + 2, 2)));
    if (rep.expected.back() == total) break;
  }
  rep.observed.assign(rep.expected.size(), 0);
  for (int k = 0; k < trials; ++k) {
    const std::uint64_t sd = split_seed(seed, static_cast<std::uint64_t>(k));
    rep.seeds.push_back(sd);
    const Scheme z = scheme_of(flat_fat_points_plane(s, m, sd, f));
    for (std::size_t j = 0; j < rep.expected.size(); ++j) {
      rep.observed[j] = std::max(rep.observed[j], hilbert_value(z, static_cast<int>(j)));
    }
    if (rep.observed == rep.expected) break;
  }
  rep.generic = rep.observed == rep.expected;
  return rep;
}

// ---------------------------------------------------------------------------

namespace {

std::pair<int, int> read_range(const nlohmann::json& spec, const char* key) {
  if (!spec.contains(key)) throw std::invalid_argument(std::string("scan spec needs \"") + key + "\"");
  const auto& r = spec.at(key);
  if (r.is_number_integer()) return {r.get<int>(), r.get<int>()};
  if (!r.is_array() || r.size() != 2) throw std::invalid_argument(std::string("\"") + key + "\" must be [lo, hi]");
  return {r[0].get<int>(), r[1].get<int>()};
}

template <class Fn>
void parallel_for(std::size_t n, Fn fn) {
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(n, std::thread::hardware_concurrency()));
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace

std::vector<ScanCell> conjecture_scan(const nlohmann::json& spec, FieldSpec f) {
  const std::string kind = spec.value("kind", std::string("slp"));
  const int trials = spec.value("trials", 5);
  const std::uint64_t seed = spec.value("seed", std::uint64_t{1});
  const auto [mlo, mhi] = read_range(spec, "m");
  std::vector<ScanCell> cells;
  if (kind == "slp") {
    const auto [rlo, rhi] = read_range(spec, "r");
    for (int r = rlo; r <= rhi; ++r)
      for (int m = mlo; m <= mhi; ++m) cells.push_back({{{"r", r}, {"m", m}}, nullptr, std::nullopt});
  } else if (kind == "flat-fat") {
    const auto [slo, shi] = read_range(spec, "s");
    for (int m = mlo; m <= mhi; ++m)
      for (int s = slo; s <= shi; ++s) cells.push_back({{{"s", s}, {"m", m}}, nullptr, std::nullopt});
  } else {
    throw std::invalid_argument("unknown scan kind '" + kind + "'");
  }
  parallel_for(cells.size(), [&](std::size_t i) {
    auto& cell = cells[i];
    try {
      if (kind == "slp") {
        const int r = cell.key["r"], m = cell.key["m"];
        const std::uint64_t cs = split_seed(seed, static_cast<std::uint64_t>(r));
        const auto rep = slp_range_verdict(general_skew_lines(r, cs, f), m, {trials, split_seed(cs, m), false});
        cell.result = to_json(rep);
        cell.result["config_seed"] = cs;
      } else {
        const int s = cell.key["s"], m = cell.key["m"];
        cell.result = to_json(genericity_test_flatfat(s, m, trials, split_seed(seed, 1000 * m + s), f));
      }
    } catch (const std::exception& e) {
      cell.error = e.what();
    }
  });
  return cells;
}

// ---------------------------------------------------------------------------

namespace {

std::int64_t groebner_ideal_dim(const Ideal& I, int t) {
  return dim_forms(I.ring(), t) - quotient_dimension(I, t);
}

Polynomial linear_poly(const RingSpec& ring, const std::vector<Fp>& c) {
  Polynomial p(ring);
  for (int i = 0; i < ring.n_vars; ++i) {
    if (c[i] != 0) p += Polynomial::variable(ring, i).scaled(c[i]);
  }
  return p;
}

void compare(AuditReport& rep, const std::string& what, const Configuration& cfg, int t, int m, std::int64_t a,
             std::int64_t b) {
  ++rep.comparisons;
  if (a != b) rep.discrepancies.push_back({what, to_json(cfg), t, m, a, b});
}

}  // namespace

AuditReport cross_engine_audit(int max_r, int max_t, std::uint64_t seed, FieldSpec f) {
  AuditReport rep;
  for (int r = 1; r <= max_r; ++r) {
    const Configuration cfg = general_skew_lines(r, split_seed(seed, r), f);
    ++rep.cases;
    const Ideal ic = configuration_ideal(cfg);
    const RaoProfile prof = rao_profile(cfg, max_t);
    for (int t = 0; t <= max_t; ++t) {
      const std::int64_t it = groebner_ideal_dim(ic, t);
      compare(rep, "ideal", cfg, t, 0, ideal_dimension(cfg, t), it);
      // h0 of r disjoint lines is r(t+1) independent of the engines.
      compare(rep, "rao", cfg, t, 0, prof.dim(t), static_cast<std::int64_t>(r) * (t + 1) - dim_forms(cfg.ambient, t) + it);
    }
    const auto L = sample_form(f, 4, split_seed(seed, 100 + r));
    for (int m = 1; m <= 3; ++m) {
      const Ideal sat = saturate(ic + Ideal(cfg.ambient, {pow(linear_poly(cfg.ambient, L), m)}),
                                 Ideal::irrelevant(cfg.ambient)).ideal;
      for (int t = 0; t <= max_t; ++t) {
        compare(rep, "section", cfg, t, m, section_scheme_dimension(cfg, L, m, t), groebner_ideal_dim(sat, t));
      }
    }
  }
  for (int m = 1; m <= 3; ++m) {
    for (int s = 1; s <= max_r; ++s) {
      const Configuration cfg = flat_fat_points_plane(s, m, split_seed(seed, 10000 + 100 * m + s), f);
      ++rep.cases;
      const Ideal ic = configuration_ideal(cfg);
      for (int t = 0; t <= max_t; ++t) {
        compare(rep, "flat-fat", cfg, t, m, ideal_dimension(cfg, t), groebner_ideal_dim(ic, t));
      }
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------

nlohmann::json to_json(const LefschetzReport& r) {
  nlohmann::json j;
  j["recipe"] = r.recipe;
  j["m"] = r.m;
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : r.rows) {
    nlohmann::json e{{"t", row.t}, {"dim_src", row.dim_src}, {"dim_tgt", row.dim_tgt}, {"rank", row.rank},
                     {"maximal", row.maximal}};
    if (row.by_shortcut) e["by_shortcut"] = true;
    rows.push_back(e);
  }
  j["rows"] = rows;
  j["verdict"] = verdict_name(r.verdict);
  j["failing_degrees"] = r.failing_degrees;
  nlohmann::json seeds = nlohmann::json::array(), forms = nlohmann::json::array();
  for (const auto& s : r.samples) {
    seeds.push_back(s.seed);
    forms.push_back(s.form);
  }
  j["seeds"] = seeds;
  j["forms"] = forms;
  if (r.probabilistic) j["caveat"] = "probabilistic";
  return j;
}

nlohmann::json to_json(const RaoProfile& p) {
  nlohmann::json j;
  nlohmann::json dims = nlohmann::json::object(), socle = nlohmann::json::object();
  for (const auto& [t, d] : p.dims) dims[std::to_string(t)] = d;
  for (const auto& [t, d] : p.socle) socle[std::to_string(t)] = d;
  j["dims"] = dims;
  if (!p.socle.empty()) j["socle"] = socle;
  j["horizon"] = p.horizon;
  if (const auto s = p.support()) j["support"] = {s->first, s->second};
  const auto& cfg = p.presentation->config();
  j["recipe"] = cfg.recipe;
  j["seed"] = cfg.seed;
  return j;
}

nlohmann::json to_json(const FlatFatReport& r) {
  return {{"s", r.s}, {"m", r.m}, {"generic", r.generic}, {"expected", r.expected}, {"observed", r.observed},
          {"seeds", r.seeds}};
}

nlohmann::json to_json(const AuditReport& r) {
  nlohmann::json d = nlohmann::json::array();
  for (const auto& x : r.discrepancies) {
    d.push_back({{"what", x.what}, {"config", x.config}, {"t", x.t}, {"m", x.m}, {"restriction", x.restriction},
                 {"groebner", x.groebner}});
  }
  return {{"cases", r.cases}, {"comparisons", r.comparisons}, {"discrepancies", d}};
}

std::string to_markdown(const LefschetzReport& r) {
  std::ostringstream os;
  os << "**x L^" << r.m << "** on " << (r.recipe.empty() ? "configuration" : r.recipe) << ": "
     << verdict_name(r.verdict);
  if (r.probabilistic) os << " (probabilistic, " << r.samples.size() << " samples)";
  os << "\n\n| t | dim [M]_{t-" << r.m << "} | dim [M]_t | rank | maximal |\n|---|---|---|---|---|\n";
  for (const auto& row : r.rows) {
    os << "| " << row.t << " | " << row.dim_src << " | " << row.dim_tgt << " | " << row.rank << " | "
       << (row.maximal ? "yes" : "**no**") << (row.by_shortcut ? " (shortcut)" : "") << " |\n";
  }
  return os.str();
}

std::string to_markdown(const RaoProfile& p) {
  std::ostringstream head, sep, dims, soc;
  head << "| t |";
  sep << "|---|";
  dims << "| dim [M]_t |";
  soc << "| socle |";
  for (const auto& [t, d] : p.dims) {
    head << " " << t << " |";
    sep << "---|";
    dims << " " << d << " |";
    auto it = p.socle.find(t);
    soc << " " << (it == p.socle.end() ? std::string("") : std::to_string(it->second)) << " |";
  }
  std::string out = head.str() + "\n" + sep.str() + "\n" + dims.str() + "\n";
  if (!p.socle.empty()) out += soc.str() + "\n";
  return out;
}

}  // namespace raolab
