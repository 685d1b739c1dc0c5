#include <array>
#include <random>

#include "doctest.h"
#include "raolab/poly.hpp"

using namespace raolab;

namespace {

Polynomial random_poly(const RingSpec& r, int deg, std::mt19937_64& rng) {
  std::vector<Term> t;
  for (const auto& m : monomial_basis(r, deg)) {
    if (rng() % 3 == 0) t.push_back({m, static_cast<Fp>(rng() % r.field.p())});
  }
  return Polynomial(r, t);
}

}  // namespace

TEST_CASE("parse basics") {
  RingSpec r;
  const Polynomial f = parse("x0^2 + 3*x1*x2", r);
  CHECK(f.size() == 2);
  CHECK(f.is_homogeneous());
  CHECK(f.degree() == 2);

  const Polynomial cube = parse("(x0+x1)^3", r);
  REQUIRE(cube.size() == 4);
  std::vector<Fp> coeffs;
  for (const auto& t : cube.terms()) coeffs.push_back(t.c);
  CHECK(coeffs == std::vector<Fp>{1, 3, 3, 1});

  CHECK(parse("x0*x1 - x1*x0", r).is_zero());
  CHECK(parse("x*y - x0*x1", r).is_zero());
  CHECK(parse("-2*x3 + 2*w", r).is_zero());
  CHECK(parse("x0x1", r) == parse("x0*x1", r));
}

TEST_CASE("parse errors carry positions") {
  RingSpec r;
  CHECK_THROWS_AS(parse("x0 + x7", r), ParseError);
  CHECK_THROWS_AS(parse("x0 +", r), ParseError);
  CHECK_THROWS_AS(parse("1/2*x0", r), ParseError);
  CHECK_THROWS_AS(parse("q1", r), ParseError);
  try {
    parse("x0 + * x1", r);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 5);
  }
}

TEST_CASE("print and parse round trip") {
  RingSpec r;
  std::mt19937_64 rng(1);
  for (int k = 0; k < 30; ++k) {
    const Polynomial f = random_poly(r, 1 + k % 4, rng);
    CHECK(parse(to_string(f), r) == f);
  }
  CHECK(to_string(Polynomial(r)) == "0");
  CHECK(to_string(parse("3*x0^2*x1 - x2", r)) == "3*x0^2*x1 - x2");
}

TEST_CASE("ring axioms spot checks") {
  RingSpec r;
  std::mt19937_64 rng(2);
  for (int k = 0; k < 20; ++k) {
    const auto a = random_poly(r, 2, rng), b = random_poly(r, 2, rng), c = random_poly(r, 1, rng);
    CHECK(a * b == b * a);
    CHECK((a + b) * c == a * c + b * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a + b == b + a);
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("substitution") {
  RingSpec r;
  RingSpec line(2, FieldSpec{});
  const Polynomial s = Polynomial::variable(line, 0), u = Polynomial::variable(line, 1);
  const Polynomial zero(line);
  CHECK(substitute(parse("x0", r), {s, u, zero, zero}) == s);

  RingSpec pq(4, FieldSpec{});
  const auto S = Polynomial::variable(pq, 0), U = Polynomial::variable(pq, 1);
  const auto V = Polynomial::variable(pq, 2), W = Polynomial::variable(pq, 3);
  CHECK(substitute(parse("x0*x3 - x1*x2", r), {S * V, S * W, U * V, U * W}).is_zero());

  // Generic linear form on a line: compare against direct evaluation.
  std::mt19937_64 rng(4);
  const Polynomial l = random_poly(r, 1, rng) + parse("x0 + x1 + x2 + x3", r);
  std::vector<Polynomial> img;
  for (int i = 0; i < 4; ++i) {
    img.push_back(s.scaled(static_cast<Fp>(rng() % 32003)) + u.scaled(static_cast<Fp>(rng() % 32003)));
  }
  const Polynomial restricted = substitute(l, img);
  CHECK(restricted.degree() == 1);
  const Fp a = 17, b = 29;
  std::vector<Fp> pt;
  for (const auto& g : img) pt.push_back(g.evaluate({a, b}));
  CHECK(restricted.evaluate({a, b}) == l.evaluate(pt));

  CHECK_THROWS(substitute(parse("x0", r), {s, u}));
  CHECK_THROWS(substitute(parse("x0", r), {s, s * u, zero, zero}));
}

TEST_CASE("substitution is a ring homomorphism") {
  RingSpec r;
  RingSpec line(2, FieldSpec{});
  std::mt19937_64 rng(8);
  std::vector<Polynomial> img;
  for (int i = 0; i < 4; ++i) img.push_back(random_poly(line, 3, rng) + parse("x0^3", line));
  for (int k = 0; k < 10; ++k) {
    const auto f = random_poly(r, 2, rng), g = random_poly(r, 2, rng);
    CHECK(substitute(f * g, img) == substitute(f, img) * substitute(g, img));
    CHECK(substitute(f + g, img) == substitute(f, img) + substitute(g, img));
  }
}

TEST_CASE("monomial basis") {
  RingSpec r;
  CHECK(monomial_basis(r, 0).size() == 1);
  CHECK(monomial_basis(r, -1).empty());
  for (int t = 0; t < 8; ++t) CHECK(monomial_basis(r, t).size() == binomial(t + 3, 3));
  const auto b = monomial_basis(r, 3);
  for (std::size_t i = 1; i < b.size(); ++i) CHECK(compare(b[i - 1], b[i], r) > 0);
}

TEST_CASE("monomial orders") {
  RingSpec grev;
  const RingSpec lex = grev.with_order(MonomialOrder::Lex);
  const RingSpec elim = grev.with_order(MonomialOrder::BlockElim, 1);
  const Monomial a = parse("x1^3", grev).lead().m;
  const Monomial b = parse("x0*x3", grev).lead().m;
  CHECK(compare(a, b, grev) > 0);
  CHECK(compare(a, b, lex) < 0);
  CHECK(compare(a, b, elim) < 0);
  // grevlex: x1*x2 > x0*x3 (smaller power of the last variable wins).
  CHECK(compare(parse("x1*x2", grev).lead().m, b, grev) > 0);
  // Compatible with multiplication.
  std::mt19937_64 rng(6);
  for (int k = 0; k < 100; ++k) {
    const auto bs = monomial_basis(grev, 3);
    const Monomial x = bs[rng() % bs.size()], y = bs[rng() % bs.size()];
    const Monomial z = monomial_basis(grev, 2)[rng() % 10];
    for (const RingSpec* ring : std::array<const RingSpec*, 3>{&grev, &lex, &elim}) {
      CHECK(compare(x, y, *ring) == compare(x * z, y * z, *ring));
    }
  }
}

TEST_CASE("ideal file format") {
  const auto list = parse_ideal_file("# test\nring: n_vars=3 p=65537\nx0^2 - x1*x2\n\nx2\n");
  CHECK(list.ring.n_vars == 3);
  CHECK(list.ring.field.p() == 65537);
  REQUIRE(list.polys.size() == 2);
  const auto again = parse_ideal_file(format_ideal_file(list.ring, list.polys));
  CHECK(again.polys == list.polys);
  CHECK_THROWS(parse_ideal_file("ring: n_vars=3 p=100\nx0\n"));
}
