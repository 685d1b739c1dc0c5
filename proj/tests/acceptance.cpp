// One PASS/FAIL line per acceptance criterion. Time limits are wall-clock
// seconds on a single core.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "raolab/constructors.hpp"
#include "raolab/lefschetz.hpp"
#include "raolab/matrix.hpp"

using namespace raolab;
using Vec = std::vector<std::int64_t>;

namespace {

constexpr double kLimitExample39 = 5.0;
constexpr double kLimitZ3 = 5.0;
constexpr double kLimitVerdicts = 60.0;
constexpr double kLimitCubic = 1.0;
constexpr double kLimitLiaison = 300.0;

struct Check {
  bool ok = true;
  std::ostringstream why;
  void expect(bool cond, const std::string& what) {
    if (!cond) {
      if (!ok) why << "; ";
      ok = false;
      why << what;
    }
  }
  template <class T>
  void equal(const T& got, const T& want, const std::string& what) {
    if (!(got == want)) {
      std::ostringstream os;
      os << what << ": got " << show(got) << ", want " << show(want);
      expect(false, os.str());
    }
  }
  static std::string show(std::int64_t v) { return std::to_string(v); }
  static std::string show(const Vec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
  }
  static std::string show(const std::string& s) { return s; }
  static std::string show(const std::vector<int>& v) {
    Vec w(v.begin(), v.end());
    return show(w);
  }
};

std::int64_t choose(int n, int k) { return n < k || k < 0 ? 0 : static_cast<std::int64_t>(binomial(n, k)); }

std::vector<Fp> form(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_linear_form(FieldSpec(), 4, rng);
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void time_limit(Check& c, double elapsed, double limit) {
  std::ostringstream os;
  os << "took " << elapsed << " s, limit " << limit << " s";
  c.expect(elapsed < limit, os.str());
}

// 29 general lines and a general plane.
void criterion1(Check& c) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto cfg = general_skew_lines(29, 1);
  const auto L = form(2);
  const Scheme z1 = plane_section_scheme(cfg, L);
  const Scheme z2 = section_scheme(cfg, L, 2);
  c.equal(h_vector(z1), Vec{1, 2, 3, 4, 5, 6, 7, 1}, "h(Z1)");
  c.equal(h_vector(z2), Vec{1, 3, 5, 7, 9, 11, 13, 9}, "h(Z2)");
  Vec col;
  for (int t = 3; t <= 8; ++t) col.push_back(ideal_dimension(z2, t - 1));
  c.equal(col, Vec{1, 4, 10, 20, 35, 62}, "dim [I_Z2]_{t-1}");
  c.equal(ideal_dimension(z1, 7), std::int64_t{7}, "dim [I_Z1|H]_7");
  c.equal(ideal_dimension(z1, 8), std::int64_t{16}, "dim [I_Z1|H]_8");
  c.equal(*z2.degree() - hilbert_value(z2, 6), std::int64_t{9}, "h1(I_Z2(6))");
  time_limit(c, seconds_since(t0), kLimitExample39);
}

void criterion2(Check& c) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto cfg = general_skew_lines(29, 3);
  const Scheme z3 = section_scheme(cfg, form(4), 3);
  Vec got, want;
  for (int j = 0; j <= 10; ++j) {
    got.push_back(hilbert_value(z3, j));
    want.push_back(std::min<std::int64_t>(87, 3 * choose(j + 1, 2) + 1));
  }
  c.equal(got, want, "h_Z3 vs min(87, 3C(j+1,2)+1)");
  c.equal(Vec(got.begin(), got.begin() + 9), Vec{1, 4, 10, 19, 31, 46, 64, 85, 87}, "h_Z3(0..8)");
  time_limit(c, seconds_since(t0), kLimitZ3);
}

void criterion3(Check& c) {
  const auto cfg = general_skew_lines(25, 5);
  const auto L = form(6);
  const std::vector<std::pair<Vec, Vec>> want = {
      {{1, 2, 3, 4, 5, 6, 4}, {1, 3, 5, 7, 9, 11, 13, 1}},
      {{1, 2, 3, 4, 5, 6, 6}, {1, 3, 5, 7, 9, 11, 12}},
      {{1, 2, 3, 4, 5, 6, 7, 1}, {1, 3, 5, 7, 9, 11, 10}},
  };
  for (int k = 0; k <= 2; ++k) {
    const auto sp = specialize_into_plane(cfg, L, 3, k, 7 + k);
    c.equal(h_vector(sp.x1), want[k].first, "X1 with " + std::to_string(k) + " moved");
    c.equal(h_vector(sp.x2), want[k].second, "X2 with " + std::to_string(k) + " moved");
  }
  // before any move X1 is Z1 and X2 is Z2
  c.equal(h_vector(plane_section_scheme(cfg, L)), want[0].first, "Z1");
  c.equal(h_vector(section_scheme(cfg, L, 2)), want[0].second, "Z2");
}

// A vacuous verdict has no map with nonzero source and target; it counts as
// holding.
void criterion4(Check& c) {
  const auto t0 = std::chrono::steady_clock::now();
  int vacuous = 0;
  for (int r = 4; r <= 12; ++r) {
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
      const RaoProfile p = rao_profile(general_skew_lines(r, 1000 * r + seed));
      for (int m = 1; m <= 3; ++m) {
        const auto rep = slp_range_verdict(p, m, {5, seed, false});
        if (rep.verdict == Verdict::Vacuous) ++vacuous;
        c.expect(rep.verdict != Verdict::Fails,
                 "r=" + std::to_string(r) + " m=" + std::to_string(m) + " seed=" + std::to_string(seed) + " fails");
      }
    }
  }
  std::printf("  note: %d of 81 cells vacuous (r = 4, 5 at m = 3)\n", vacuous);
  time_limit(c, seconds_since(t0), kLimitVerdicts);
}

void criterion5(Check& c) {
  for (int r = 4; r <= 10; ++r) {
    RaoProfile p = rao_profile(quadric_ruling_lines(r, 50 + r));
    fill_socle(p);
    const std::string tag = "r=" + std::to_string(r) + " ";
    c.equal(p.dim(0), std::int64_t{r - 1}, tag + "dim [M]_0");
    c.expect(p.support() && *p.support() == std::make_pair(0, r - 2), tag + "support");
    for (int t = 0; t <= r - 2; ++t) c.equal(p.dim(t), p.dim(r - 2 - t), tag + "symmetry at " + std::to_string(t));
    for (const auto& [t, d] : p.socle) {
      if (t != r - 2) c.equal(d, std::int64_t{0}, tag + "socle at " + std::to_string(t));
    }
    c.expect(p.socle[r - 2] > 0, tag + "socle in degree r-2");
    c.expect(slp_range_verdict(p, 1).verdict == Verdict::Holds, tag + "WLP");
  }
}

void criterion6(Check& c) {
  for (int r = 6; r <= 10; ++r) {
    const RaoProfile p = rao_profile(quadric_plus_general(r, 1, 60 + r));
    const std::string tag = "r=" + std::to_string(r) + " ";
    for (int t = 1; t < r; ++t) {
      const std::int64_t want = (t + 1) * (r + 1) - choose(t + 3, 3) + choose(t + 1, 3) - (t - 1);
      c.equal(p.dim(t), want, tag + "dim [M]_" + std::to_string(t));
    }
    c.expect(slp_range_verdict(p, 1).verdict == Verdict::Holds, tag + "WLP");
  }
}

void criterion7(Check& c) {
  for (int s = 10; s <= 12; ++s) {
    const RaoProfile p = rao_profile(quadric_plus_general(s - 2, 2, 70 + s));
    const std::string tag = "s=" + std::to_string(s) + " ";
    c.equal(p.dim(2), std::int64_t{3 * s - 10}, tag + "dim [M]_2");
    c.equal(p.dim(3), std::int64_t{4 * s - 20}, tag + "dim [M]_3");
    const std::int64_t full = std::min(p.dim(2), p.dim(3));
    for (std::uint64_t k = 0; k < 5; ++k) {
      const auto mr = multiplication_rank(p, form(900 + k), 1, 3);
      c.expect(mr.rank < full, tag + "sample " + std::to_string(k) + " reached maximal rank");
    }
  }
}

void criterion8(Check& c) {
  {
    const auto cfg = quadric_plus_general(10, 3, 81);
    const RaoProfile p = rao_profile(cfg);
    const auto L = form(82);
    c.equal(p.dim(3), std::int64_t{32}, "10+3 dim [M]_3");
    c.equal(p.dim(4), std::int64_t{31}, "10+3 dim [M]_4");
    c.equal(ideal_dimension(plane_section_scheme(cfg, L), 4), std::int64_t{3}, "10+3 dim [I_Z|H]_4");
    c.equal(ideal_dimension(cfg, 4), std::int64_t{1}, "10+3 dim [I_C]_4");
    const auto rep = slp_range_verdict(p, 1);
    bool fails34 = false;
    for (int t : rep.failing_degrees) fails34 = fails34 || t == 4;
    c.expect(fails34, "10+3 maximal rank should fail from 3 to 4");
  }
  {
    const RaoProfile p = rao_profile(quadric_plus_general(11, 4, 83));
    c.equal(p.dim(3), std::int64_t{40}, "11+4 dim [M]_3");
    c.equal(p.dim(4), std::int64_t{40}, "11+4 dim [M]_4");
    std::int64_t best = 0;
    for (std::uint64_t k = 0; k < 5; ++k) best = std::max(best, multiplication_rank(p, form(840 + k), 1, 4).rank);
    c.equal(best, std::int64_t{38}, "11+4 rank of x L");
  }
}

void criterion9(Check& c) {
  const auto cfg = arithmetic_genus_zero(91);
  const RaoProfile p = rao_profile(cfg);
  c.equal(Vec{p.dim(0), p.dim(1), p.dim(2), p.dim(3)}, Vec{0, 7, 11, 11}, "dim [M]_0..3");
  c.equal(std::int64_t{cfg.arithmetic_genus()}, std::int64_t{0}, "arithmetic genus");
  const auto rep = slp_range_verdict(p, 1);
  bool fails23 = false;
  for (int t : rep.failing_degrees) fails23 = fails23 || t == 3;
  c.expect(fails23, "WLP should fail from 2 to 3");
}

void criterion10(Check& c) {
  for (int m = 1; m <= 4; ++m) {
    for (int s = 1; s <= 10; ++s) {
      const auto rep = genericity_test_flatfat(s, m, 3, 100 * m + s);
      const std::string tag = "(s,m)=(" + std::to_string(s) + "," + std::to_string(m) + ")";
      if (m <= 2) {
        c.expect(rep.generic, tag + " should be generic");
      } else if (m == 3) {
        c.expect(rep.generic == (s >= 3), tag + (s >= 3 ? " should be generic" : " should not be generic"));
      } else if (s <= 4) {
        c.expect(!rep.generic, tag + " should not be generic");
      } else {
        std::printf("  evidence: %s generic=%s\n", tag.c_str(), rep.generic ? "yes" : "no");
      }
    }
  }
}

void criterion11(Check& c) {
  const auto t0 = std::chrono::steady_clock::now();
  const RingSpec r(3, FieldSpec());
  const Ideal I = intersect({Ideal(r, {parse("(x+y)^3", r), parse("z", r)}), Ideal(r, {parse("(x+z)^3", r), parse("y", r)}),
                             Ideal(r, {parse("(y-z)^3", r), parse("x", r)})});
  c.equal(choose(5, 2) - quotient_dimension(I, 3), std::int64_t{1}, "dim [I]_3");
  c.expect(I.contains(parse("x*y*z", r)), "xyz in I");
  time_limit(c, seconds_since(t0), kLimitCubic);
}

void criterion12(Check& c) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto a = liaison_pipeline(121);
  const auto b = liaison_pipeline(121, FieldSpec(kSecondPrime));
  for (const auto* chain : {&a, &b}) {
    c.equal(chain->degree_c3, std::int64_t{16}, "deg C3");
    c.equal(chain->quintics, std::int64_t{2}, "dim [I_C3]_5");
    c.expect(chain->smooth, "C3 smooth");
  }
  c.equal(a.degree_c2, b.degree_c2, "deg C2 agrees across primes");
  time_limit(c, seconds_since(t0), kLimitLiaison);
}

void criterion13(Check& c) {
  // bookkeeping identity on 10 random configurations, m <= 3
  std::mt19937_64 rng(131);
  for (int k = 0; k < 10; ++k) {
    Configuration cfg;
    switch (k % 4) {
      case 0: cfg = general_skew_lines(3 + static_cast<int>(rng() % 6), rng()); break;
      case 1: cfg = quadric_plus_general(3 + static_cast<int>(rng() % 5), static_cast<int>(rng() % 3), rng()); break;
      case 2: cfg = rational_curve(4 + static_cast<int>(rng() % 4), rng()); break;
      default: cfg = incident_line(general_skew_lines(2 + static_cast<int>(rng() % 3), rng()), 0, rng()); break;
    }
    const RaoProfile p = rao_profile(cfg);
    const auto L = form(rng());
    for (int m = 1; m <= 3; ++m) {
      for (int t = 0; t <= p.horizon + m; ++t) {
        try {
          const auto mr = multiplication_rank(p, L, m, t);
          if (p.dim(t - m) - mr.rank != mr.kernel_formula)
            c.expect(false, "bookkeeping off at config " + std::to_string(k) + " m=" + std::to_string(m) + " t=" + std::to_string(t));
        } catch (const InternalInconsistency& e) {
          c.expect(false, e.what());
        }
      }
    }
  }
  const auto audit = cross_engine_audit(6, 8, 132);
  c.equal(static_cast<std::int64_t>(audit.discrepancies.size()), std::int64_t{0}, "audit discrepancies");
  // gf-linalg: rank-nullity and transpose rank on random low-rank matrices
  const FieldSpec f;
  for (int k = 0; k < 20; ++k) {
    const std::size_t rows = 5 + rng() % 20, cols = 5 + rng() % 20, inner = 1 + rng() % 8;
    FieldMatrix a(f, rows, inner), b(f, inner, cols);
    for (auto* m : {&a, &b})
      for (std::size_t i = 0; i < m->rows(); ++i)
        for (std::size_t j = 0; j < m->cols(); ++j) (*m)(i, j) = static_cast<Fp>(rng() % f.p());
    const FieldMatrix p = a * b;
    const std::size_t rk = rank(p);
    c.expect(rk <= inner, "rank above inner dimension");
    c.expect(rk == rank(p.transpose()), "transpose rank");
    c.expect(rk + nullspace(p).cols() == cols, "rank-nullity");
    c.expect(rank(p * nullspace(p)) == 0, "kernel");
  }
  // ideal-engine: the Hilbert function does not depend on the order
  const RingSpec grev(3, f), lex = grev.with_order(MonomialOrder::Lex);
  for (int k = 0; k < 3; ++k) {
    std::vector<Polynomial> g;
    for (int d : {2, 2, 3}) {
      Polynomial p(grev);
      for (const auto& mono : monomial_basis(grev, d)) p += Polynomial::monomial(grev, mono, static_cast<Fp>(rng() % f.p()));
      g.push_back(p);
    }
    std::vector<Polynomial> gl;
    for (const auto& p : g) gl.push_back(p.with_order(MonomialOrder::Lex));
    const Ideal a(grev, g), b(lex, gl);
    for (int t = 0; t <= 6; ++t) c.expect(quotient_dimension(a, t) == quotient_dimension(b, t), "order dependence");
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria = {
      {"section tables for 29 general lines", criterion1},
      {"Hilbert function of Z3 for 29 general lines", criterion2},
      {"specialization h-vectors for 25 general lines", criterion3},
      {"WLP and SLP (m <= 3) for 4..12 general lines", criterion4},
      {"lines on a quadric: dims, support, symmetry, socle, WLP", criterion5},
      {"all but one line on a quadric", criterion6},
      {"all but two lines on a quadric fail 2 -> 3", criterion7},
      {"10+3 and 11+4 tables", criterion8},
      {"(1,7) curve plus two incident lines", criterion9},
      {"flat fat point genericity", criterion10},
      {"cubic intersection identity", criterion11},
      {"liaison chain from the triple line", criterion12},
      {"bookkeeping, cross-engine audit, linear algebra and order invariants", criterion13},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    std::printf("%s criterion %zu: %s (%.2f s)%s%s\n", c.ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                seconds_since(t0), c.ok ? "" : " -- ", c.why.str().c_str());
    std::fflush(stdout);
    if (!c.ok) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
