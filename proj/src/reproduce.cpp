#include "raolab/reproduce.hpp"

#include <sstream>
#include <stdexcept>

#include "raolab/constructors.hpp"
#include "raolab/lefschetz.hpp"

namespace raolab {

namespace {

using nlohmann::json;

std::vector<Fp> general_form(const ReproduceOptions& opt, std::uint64_t stream) {
  std::mt19937_64 rng(split_seed(opt.seed, stream));
  return random_linear_form(opt.field, 4, rng);
}

VerdictOptions verdict_options(const ReproduceOptions& opt) { return {opt.trials, split_seed(opt.seed, 77), false}; }

json dims_list(const RaoProfile& p, int lo, int hi) {
  json a = json::array();
  for (int t = lo; t <= hi; ++t) a.push_back(p.dim(t));
  return a;
}

json lines_29(const ReproduceOptions& opt) {
  const Configuration cfg = general_skew_lines(29, opt.seed, opt.field);
  const auto L = general_form(opt, 1);
  const Scheme z1 = plane_section_scheme(cfg, L);
  const Scheme z2 = section_scheme(cfg, L, 2);
  json col = json::array();
  for (int t = 3; t <= 8; ++t) col.push_back(ideal_dimension(z2, t - 1));
  const std::int64_t h1 = *z2.degree() - hilbert_value(z2, 6);
  return {{"h_vector_z1", h_vector(z1)},
          {"h_vector_z2", h_vector(z2)},
          {"ideal_z2_t_minus_1", col},
          {"ideal_z1_plane_7", ideal_dimension(z1, 7)},
          {"ideal_z1_plane_8", ideal_dimension(z1, 8)},
          {"h1_z2_6", h1}};
}

json z3_r29(const ReproduceOptions& opt) {
  const Configuration cfg = general_skew_lines(29, opt.seed, opt.field);
  const Scheme z3 = section_scheme(cfg, general_form(opt, 1), 3);
  json hf = json::array();
  for (int j = 0; j <= 9; ++j) hf.push_back(hilbert_value(z3, j));
  return {{"hilbert_function", hf}};
}

json specialize_25(const ReproduceOptions& opt) {
  const Configuration cfg = general_skew_lines(25, opt.seed, opt.field);
  const auto L = general_form(opt, 1);
  json out;
  for (int k = 0; k <= 2; ++k) {
    const Specialization sp = specialize_into_plane(cfg, L, 3, k, split_seed(opt.seed, 10 + k));
    out["moved_" + std::to_string(k)] = {{"x1", h_vector(sp.x1)}, {"x2", h_vector(sp.x2)}};
  }
  return out;
}

json all_but_two(int s, const ReproduceOptions& opt) {
  const Configuration cfg = quadric_plus_general(s - 2, 2, opt.seed, opt.field);
  const RaoProfile prof = rao_profile(cfg);
  const auto rep = slp_range_verdict(prof, 1, verdict_options(opt));
  std::int64_t best = -1;
  for (const auto& row : rep.rows)
    if (row.t == 3) best = row.rank;
  return {{"dim_m_2", prof.dim(2)},   {"dim_m_3", prof.dim(3)},     {"verdict", verdict_name(rep.verdict)},
          {"rank_2_to_3", best},      {"failing_degrees", rep.failing_degrees}, {"samples", rep.samples.size()}};
}

json ruling_plus_general(int ruling, int general, const ReproduceOptions& opt) {
  const Configuration cfg = quadric_plus_general(ruling, general, opt.seed, opt.field);
  const RaoProfile prof = rao_profile(cfg);
  const auto rep = slp_range_verdict(prof, 1, verdict_options(opt));
  const auto L = rep.samples.front().form;
  std::int64_t rank34 = -1;
  for (const auto& row : rep.rows)
    if (row.t == 4) rank34 = row.rank;
  return {{"dim_m_3", prof.dim(3)},
          {"dim_m_4", prof.dim(4)},
          {"ideal_z_plane_4", ideal_dimension(plane_section_scheme(cfg, L), 4)},
          {"ideal_c_4", ideal_dimension(cfg, 4)},
          {"rank_3_to_4", rank34},
          {"maximal_3_to_4", rank34 == std::min(prof.dim(3), prof.dim(4))}};
}

json arith_genus_0(const ReproduceOptions& opt) {
  const Configuration cfg = arithmetic_genus_zero(opt.seed, opt.field);
  const RaoProfile prof = rao_profile(cfg);
  const auto rep = slp_range_verdict(prof, 1, verdict_options(opt));
  bool fails23 = false;
  for (int t : rep.failing_degrees) fails23 = fails23 || t == 3;
  return {{"dims", dims_list(prof, 0, 3)},
          {"arithmetic_genus", cfg.arithmetic_genus()},
          {"h0_1", h0_structure_sheaf(cfg, 1)},
          {"fails_2_to_3", fails23},
          {"verdict", verdict_name(rep.verdict)}};
}

json lines_on_quadric(const ReproduceOptions& opt) {
  json out;
  for (int r = 4; r <= 10; ++r) {
    RaoProfile prof = rao_profile(quadric_ruling_lines(r, split_seed(opt.seed, r), opt.field));
    fill_socle(prof);
    const auto sup = prof.support();
    std::vector<int> socle_degrees;
    for (const auto& [t, d] : prof.socle)
      if (d > 0) socle_degrees.push_back(t);
    out["r" + std::to_string(r)] = {{"dim_m_0", prof.dim(0)},
                                   {"support", {sup->first, sup->second}},
                                   {"socle_degrees", socle_degrees},
                                   {"wlp", verdict_name(slp_range_verdict(prof, 1, verdict_options(opt)).verdict)}};
  }
  return out;
}

json all_but_one(const ReproduceOptions& opt) {
  json out;
  for (int r = 6; r <= 10; ++r) {
    const Configuration cfg = quadric_plus_general(r, 1, split_seed(opt.seed, r), opt.field);
    const RaoProfile prof = rao_profile(cfg);
    out["r" + std::to_string(r)] = {{"dims", dims_list(prof, 1, r - 1)},
                                   {"wlp", verdict_name(slp_range_verdict(prof, 1, verdict_options(opt)).verdict)}};
  }
  return out;
}

json flat_fat(const ReproduceOptions& opt) {
  json out;
  for (int m = 1; m <= 4; ++m) {
    json row = json::array();
    for (int s = 1; s <= 10; ++s) {
      row.push_back(genericity_test_flatfat(s, m, opt.trials, split_seed(opt.seed, 100 * m + s), opt.field).generic);
    }
    out["m" + std::to_string(m)] = row;
  }
  return out;
}

json cubic_intersection(const ReproduceOptions& opt) {
  const RingSpec ring(3, opt.field);
  const Ideal a(ring, {parse("(x+y)^3", ring), parse("z", ring)});
  const Ideal b(ring, {parse("(x+z)^3", ring), parse("y", ring)});
  const Ideal c(ring, {parse("(y-z)^3", ring), parse("x", ring)});
  const Ideal I = intersect({a, b, c});
  const std::int64_t dim3 = static_cast<std::int64_t>(monomial_basis(ring, 3).size()) - quotient_dimension(I, 3);
  return {{"dim_3", dim3}, {"contains_xyz", I.contains(parse("x*y*z", ring))}};
}

json liaison_chain_tables(const ReproduceOptions& opt) {
  const LiaisonChain chain = liaison_pipeline(opt.seed, opt.field);
  return {{"degree_c1", chain.degree_c1},
          {"degree_c2", chain.degree_c2},
          {"degree_c3", chain.degree_c3},
          {"quintics", chain.quintics},
          {"smooth", chain.smooth}};
}

std::string dump_short(const json& j) {
  std::string s = j.dump();
  return s.size() > 200 ? s.substr(0, 200) + "..." : s;
}

}  // namespace

std::vector<std::string> reproduction_tags() {
  return {"lines-29",     "z3-r29",         "specialize-25",    "lines-on-quadric", "all-but-one",
          "all-but-two-s10", "all-but-two-s11", "all-but-two-s12", "quadric-10-plus-3",       "quadric-11-plus-4",
          "arith-genus-0",   "flat-fat",       "cubic-intersection", "liaison-chain"};
}

json run_reproduction(const std::string& tag, const ReproduceOptions& opt) {
  if (tag == "lines-29") return lines_29(opt);
  if (tag == "z3-r29") return z3_r29(opt);
  if (tag == "specialize-25") return specialize_25(opt);
  if (tag == "lines-on-quadric") return lines_on_quadric(opt);
  if (tag == "all-but-one") return all_but_one(opt);
  if (tag == "all-but-two-s10") return all_but_two(10, opt);
  if (tag == "all-but-two-s11") return all_but_two(11, opt);
  if (tag == "all-but-two-s12") return all_but_two(12, opt);
  if (tag == "quadric-10-plus-3") return ruling_plus_general(10, 3, opt);
  if (tag == "quadric-11-plus-4") return ruling_plus_general(11, 4, opt);
  if (tag == "arith-genus-0") return arith_genus_0(opt);
  if (tag == "flat-fat") return flat_fat(opt);
  if (tag == "cubic-intersection") return cubic_intersection(opt);
  if (tag == "liaison-chain") return liaison_chain_tables(opt);
  throw std::invalid_argument("unknown reproduction tag '" + tag + "'");
}

std::vector<std::string> golden_diff(const json& computed, const json& expected, const std::string& path) {
  std::vector<std::string> out;
  if (expected.is_object()) {
    for (const auto& [k, v] : expected.items()) {
      const std::string p = path.empty() ? k : path + "." + k;
      if (!computed.is_object() || !computed.contains(k)) {
        out.push_back(p + ": missing");
        continue;
      }
      auto sub = golden_diff(computed.at(k), v, p);
      out.insert(out.end(), sub.begin(), sub.end());
    }
    return out;
  }
  if (computed != expected) {
    out.push_back((path.empty() ? std::string("value") : path) + ": expected " + dump_short(expected) + ", got " +
                  dump_short(computed));
  }
  return out;
}

}  // namespace raolab
