#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "raolab/config.hpp"
#include "raolab/restriction.hpp"

namespace raolab {

enum class Verdict { Holds, Fails, Vacuous };
std::string verdict_name(Verdict v);

struct RankRow {
  int t = 0;
  std::int64_t dim_src = 0;
  std::int64_t dim_tgt = 0;
  std::int64_t rank = 0;
  bool maximal = true;
  bool by_shortcut = false;  // certified without a rank computation
};

struct Sample {
  std::uint64_t seed = 0;
  std::vector<Fp> form;
};

/// Outcome of sweeping x L^m over the support window. Ranks are the best
/// seen over the samples; rank only drops on a closed set, so one maximal
/// sample certifies a degree.
struct LefschetzReport {
  std::string recipe;
  int m = 1;
  std::vector<RankRow> rows;
  Verdict verdict = Verdict::Vacuous;
  std::vector<int> failing_degrees;
  std::vector<Sample> samples;
  bool probabilistic = false;  // fails: no sampled form reached maximal rank
};

struct VerdictOptions {
  int trials = 5;
  std::uint64_t seed = 1;
  /// Skip the rank when [I_{Z|H}]_t = 0 or h^1 of the section vanishes.
  bool use_shortcut = false;
};

LefschetzReport slp_range_verdict(const RaoProfile& profile, int m, const VerdictOptions& opt = {});
LefschetzReport slp_range_verdict(const Configuration& cfg, int m, const VerdictOptions& opt = {});
LefschetzReport wlp_verdict(const Configuration& cfg, const VerdictOptions& opt = {});

/// Whether the section sequence alone forces maximal rank of x L^m at t:
/// the conditions of the section in degree t come only from multiples of
/// L^m (injective), or h^1 of the section ideal vanishes (surjective).
bool shortcut_certifies(const Configuration& cfg, const std::vector<Fp>& L, int m, int t);

/// For lines on one ruling of a quadric: symmetric dims plus injectivity of
/// x L into every degree up to (r-2)/2. Returns nullopt when dims are not
/// symmetric (the shortcut does not apply).
std::optional<bool> ruling_lines_injectivity_check(const RaoProfile& profile, const VerdictOptions& opt = {});

struct HVector {
  std::vector<std::int64_t> entries;
  std::int64_t degree = 0;
};
/// m = 1 in the plane L = 0 (3 variables), m >= 2 in the ambient ring.
HVector h_vector_of_section(const Configuration& cfg, const std::vector<Fp>& L, int m);

struct FlatFatReport {
  int s = 0, m = 0;
  bool generic = false;
  std::vector<std::int64_t> expected;  // min(ms, C(j+2,2)) until it reaches ms
  std::vector<std::int64_t> observed;  // best over trials
  std::vector<std::uint64_t> seeds;
};
FlatFatReport genericity_test_flatfat(int s, int m, int trials = 3, std::uint64_t seed = 1,
                                      FieldSpec f = {});

struct ScanCell {
  nlohmann::json key;
  nlohmann::json result;
  std::optional<std::string> error;
};
/// Scan spec: {"kind": "slp", "r": [lo, hi], "m": [lo, hi], "trials": k, "seed": s}
/// or {"kind": "flat-fat", "s": [lo, hi], "m": [lo, hi], ...}. Cells run in
/// parallel and come back in key order.
std::vector<ScanCell> conjecture_scan(const nlohmann::json& spec, FieldSpec f = {});

/// One mismatch between the restriction route and the Groebner route.
struct Discrepancy {
  std::string what;
  nlohmann::json config;
  int t = 0;
  int m = 0;
  std::int64_t restriction = 0;
  std::int64_t groebner = 0;
};
struct AuditReport {
  int cases = 0;
  int comparisons = 0;
  std::vector<Discrepancy> discrepancies;
};
/// Skew lines r = 1..max_r (curve ideal, Rao dims, section schemes m <= 3)
/// and flat fat points s = 1..max_r, m <= 3, compared for all t <= max_t.
AuditReport cross_engine_audit(int max_r, int max_t, std::uint64_t seed, FieldSpec f = {});

nlohmann::json to_json(const LefschetzReport& r);
nlohmann::json to_json(const RaoProfile& p);
nlohmann::json to_json(const FlatFatReport& r);
nlohmann::json to_json(const AuditReport& r);
std::string to_markdown(const LefschetzReport& r);
std::string to_markdown(const RaoProfile& p);

}  // namespace raolab
