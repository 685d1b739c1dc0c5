#include <random>

#include "doctest.h"
#include "raolab/ideal.hpp"
#include "raolab/matrix.hpp"

using namespace raolab;

namespace {

Polynomial random_form(const RingSpec& r, int deg, std::mt19937_64& rng) {
  std::vector<Term> t;
  for (const auto& m : monomial_basis(r, deg)) t.push_back({m, static_cast<Fp>(rng() % r.field.p())});
  return Polynomial(r, t);
}

// Ideal of a point: the 2x2 minors of [x | P].
Ideal point_ideal(const RingSpec& r, const std::vector<Fp>& p) {
  std::vector<Polynomial> g;
  for (int i = 0; i < r.n_vars; ++i)
    for (int j = i + 1; j < r.n_vars; ++j)
      g.push_back(Polynomial::variable(r, i).scaled(p[j]) - Polynomial::variable(r, j).scaled(p[i]));
  return Ideal(r, g);
}

// Oracle: rank of the evaluation matrix of degree-t monomials at the points.
std::int64_t evaluation_rank(const RingSpec& r, const std::vector<std::vector<Fp>>& pts, int t) {
  const auto basis = monomial_basis(r, t);
  FieldMatrix m(r.field, pts.size(), basis.size());
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j)
      m(i, j) = Polynomial::monomial(r, basis[j]).evaluate(pts[i]);
  return static_cast<std::int64_t>(rank(m));
}

}  // namespace

TEST_CASE("reduced bases satisfy the Buchberger criterion") {
  RingSpec r;
  std::mt19937_64 rng(1);
  for (int k = 0; k < 4; ++k) {
    Ideal i(r, {random_form(r, 2, rng), random_form(r, 2, rng), random_form(r, 3, rng)});
    const auto& gb = i.groebner_basis();
    CHECK(satisfies_buchberger_criterion(gb));
    for (const auto& g : i.generators()) CHECK(i.contains(g));
    for (const auto& g : gb) CHECK(g.lead().c == 1);
  }
  const RingSpec lex = r.with_order(MonomialOrder::Lex);
  Ideal il(lex, {parse("x0^2 - x1*x3", lex), parse("x1^2 - x2*x0", lex)});
  CHECK(satisfies_buchberger_criterion(il.groebner_basis()));
}

TEST_CASE("unit ideal and membership") {
  RingSpec r;
  Ideal i(r, {parse("x0", r), parse("x0 + 1", r)});
  CHECK(i.is_unit());
  Ideal j(r, {parse("x0^2", r), parse("x1", r)});
  CHECK(j.contains(parse("x0^3 + x1*x2", r)));
  CHECK_FALSE(j.contains(parse("x0", r)));
}

TEST_CASE("Hilbert function of general points agrees with evaluation ranks") {
  RingSpec r;
  std::mt19937_64 rng(2);
  std::vector<std::vector<Fp>> pts;
  std::vector<Ideal> ideals;
  for (int k = 0; k < 7; ++k) {
    std::vector<Fp> p(4);
    for (auto& v : p) v = static_cast<Fp>(rng() % r.field.p());
    pts.push_back(p);
    ideals.push_back(point_ideal(r, p));
  }
  const Ideal z = intersect(ideals);
  const HilbertData h = hilbert_function(z, 5);
  for (int t = 0; t <= 5; ++t) CHECK(h.dims_quotient.at(t) == evaluation_rank(r, pts, t));
  REQUIRE(h.hilbert_polynomial.has_value());
  CHECK(h.hilbert_polynomial->degree == 7);
  CHECK(h.hilbert_polynomial->dim == 0);
  CHECK(h.h_vector == std::vector<std::int64_t>{1, 3, 3});
}

TEST_CASE("Hilbert series of a complete intersection") {
  RingSpec r;
  std::mt19937_64 rng(3);
  Ideal ci(r, {random_form(r, 2, rng), random_form(r, 3, rng)});
  const HilbertData h = hilbert_function(ci, 6);
  REQUIRE(h.hilbert_polynomial.has_value());
  CHECK(h.hilbert_polynomial->degree == 6);
  CHECK(h.hilbert_polynomial->dim == 1);
  // Oracle: coefficients of (1-z^2)(1-z^3)/(1-z)^4.
  for (int t = 0; t <= 6; ++t) {
    auto c = [](int s) -> std::int64_t { return s < 0 ? 0 : static_cast<std::int64_t>(binomial(s + 3, 3)); };
    CHECK(h.dims_quotient.at(t) == c(t) - c(t - 2) - c(t - 3) + c(t - 5));
  }
}

TEST_CASE("elimination recovers the twisted cubic") {
  // k[s, u, x0..x3]: x_i - s^{3-i} u^i, eliminate s and u.
  RingSpec big(6, FieldSpec{});
  std::vector<Polynomial> g;
  for (int i = 0; i < 4; ++i) {
    Monomial m;
    m.set(0, 3 - i);
    m.set(1, i);
    g.push_back(Polynomial::variable(big, 2 + i) - Polynomial::monomial(big, m));
  }
  const Ideal cubic = eliminate(Ideal(big, g), {2, 3, 4, 5});
  CHECK(cubic.ring().n_vars == 4);
  const auto& gb = cubic.groebner_basis();
  CHECK(gb.size() == 3);
  const HilbertData h = hilbert_function(cubic, 6);
  for (int t = 0; t <= 6; ++t) CHECK(h.dims_quotient.at(t) == 3 * t + 1);
  CHECK(h.hilbert_polynomial->degree == 3);
}

TEST_CASE("intersection of coordinate ideals") {
  RingSpec r;
  const Ideal i = intersect(Ideal(r, {parse("x0", r)}), Ideal(r, {parse("x1", r)}));
  CHECK(i == Ideal(r, {parse("x0*x1", r)}));
  const Ideal j = intersect(Ideal(r, {parse("x0", r), parse("x1", r)}),
                            Ideal(r, {parse("x2", r), parse("x3", r)}));
  CHECK(j == Ideal(r, {parse("x0*x2", r), parse("x0*x3", r), parse("x1*x2", r), parse("x1*x3", r)}));
}

TEST_CASE("monomial colon shortcut agrees with the intersection route") {
  RingSpec r;
  std::mt19937_64 rng(4);
  for (int k = 0; k < 3; ++k) {
    const Polynomial a = random_form(r, 1, rng), b = random_form(r, 1, rng);
    const Polynomial c = random_form(r, 2, rng);
    // An ideal with nontrivial colon: (x0^2 * a, x0 * x1 * b, c * x0^3).
    Ideal i(r, {parse("x0^2", r) * a, parse("x0*x1", r) * b, c * parse("x0^3", r)});
    for (const char* g : {"x0", "x0^2", "x0*x1", "x3"}) {
      const Polynomial gp = parse(g, r);
      CHECK(quotient(i, gp) == quotient_by_intersection(i, gp));
    }
  }
}

TEST_CASE("saturation strips an embedded component") {
  RingSpec r;
  const Ideal line(r, {parse("x0", r), parse("x1", r)});
  const Ideal m = Ideal::irrelevant(r);
  const Ideal dirty = intersect(line, power(m, 3));
  CHECK_FALSE(dirty == line);
  const Saturation s = saturate(dirty, m);
  CHECK(s.ideal == line);
  CHECK(s.index == 2);
  // m-primary: the saturation is the whole ring.
  const Saturation u = saturate(power(m, 2), m);
  CHECK(u.ideal.is_unit());
  CHECK(u.index == 2);
}

TEST_CASE("singular locus") {
  RingSpec p2(3, FieldSpec{});
  CHECK(is_smooth(Ideal(p2, {parse("x0^2 + x1^2 + x2^2", p2)}), 1));
  CHECK_FALSE(is_smooth(Ideal(p2, {parse("x1^2*x2 - x0^3 - x0^2*x2", p2)}), 1));
  RingSpec r;
  const Ideal cubic(r, {parse("x0*x2 - x1^2", r), parse("x0*x3 - x1*x2", r), parse("x1*x3 - x2^2", r)});
  CHECK(is_smooth(cubic, 2));
  const Ideal two_lines(r, {parse("x0*x1", r), parse("x2", r)});
  CHECK_FALSE(is_smooth(two_lines, 2));
}

TEST_CASE("budget") {
  RingSpec r;
  std::mt19937_64 rng(5);
  Ideal i(r, {random_form(r, 3, rng), random_form(r, 3, rng), random_form(r, 3, rng)});
  CHECK_THROWS_AS(buchberger(i.generators(), r, 2), BudgetExceeded);
}
