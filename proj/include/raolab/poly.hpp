#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "raolab/field.hpp"

namespace raolab {

inline constexpr int kMaxVars = 8;

enum class MonomialOrder { GrevLex, Lex, BlockElim };

/// Variable count, coefficient field and monomial order of a polynomial ring.
/// For BlockElim the first `block` variables form the eliminated block; each
/// block is compared by grevlex and the first block dominates.
struct RingSpec {
  int n_vars = 4;
  FieldSpec field{};
  MonomialOrder order = MonomialOrder::GrevLex;
  int block = 0;

  RingSpec() = default;
  RingSpec(int n, FieldSpec f, MonomialOrder o = MonomialOrder::GrevLex, int blk = 0);

  RingSpec with_order(MonomialOrder o, int blk = 0) const { return RingSpec(n_vars, field, o, blk); }
  friend bool operator==(const RingSpec&, const RingSpec&) = default;
};

std::string order_name(MonomialOrder o, int block);

struct Monomial {
  std::array<std::uint8_t, kMaxVars> e{};
  std::uint16_t deg = 0;

  static Monomial one() { return {}; }
  static Monomial var(int i, int power = 1);

  int operator[](int i) const { return e[i]; }
  void set(int i, int v);

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

Monomial operator*(const Monomial& a, const Monomial& b);
bool divides(const Monomial& a, const Monomial& b);
/// b / a, assuming a | b.
Monomial quotient(const Monomial& b, const Monomial& a);
Monomial lcm(const Monomial& a, const Monomial& b);
bool coprime(const Monomial& a, const Monomial& b);

namespace detail {
inline int grevlex_block(const Monomial& a, const Monomial& b, int lo, int hi) {
  int da = 0, db = 0;
  for (int i = lo; i < hi; ++i) {
    da += a.e[i];
    db += b.e[i];
  }
  if (da != db) return da > db ? 1 : -1;
  for (int i = hi - 1; i >= lo; --i) {
    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
  }
  return 0;
}
}  // namespace detail

/// Three-way comparison under the ring's order: positive when a > b.
inline int compare(const Monomial& a, const Monomial& b, const RingSpec& ring) {
  switch (ring.order) {
    case MonomialOrder::GrevLex:
      if (a.deg != b.deg) return a.deg > b.deg ? 1 : -1;
      for (int i = ring.n_vars - 1; i >= 0; --i) {
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
      }
      return 0;
    case MonomialOrder::Lex:
      for (int i = 0; i < ring.n_vars; ++i) {
        if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? 1 : -1;
      }
      return 0;
    case MonomialOrder::BlockElim: {
      const int c = detail::grevlex_block(a, b, 0, ring.block);
      return c != 0 ? c : detail::grevlex_block(a, b, ring.block, ring.n_vars);
    }
  }
  return 0;
}

struct Term {
  Monomial m;
  Fp c;
  friend bool operator==(const Term&, const Term&) = default;
};

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t pos)
      : std::invalid_argument(what + " at position " + std::to_string(pos)), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

class RingMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Sparse polynomial: terms sorted strictly decreasing under the ring order,
/// no zero coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RingSpec ring) : ring_(ring) {}
  Polynomial(RingSpec ring, std::vector<Term> terms);  // sorts and combines

  static Polynomial constant(RingSpec ring, Fp c);
  static Polynomial variable(RingSpec ring, int i);
  static Polynomial monomial(RingSpec ring, const Monomial& m, Fp c = 1);
  /// Terms already strictly decreasing with nonzero coefficients; not checked.
  static Polynomial from_sorted(RingSpec ring, std::vector<Term> terms) {
    Polynomial p(ring);
    p.terms_ = std::move(terms);
    return p;
  }

  const RingSpec& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].m.deg == 0); }
  const Term& lead() const { return terms_.front(); }

  int degree() const;  // -1 for zero
  bool is_homogeneous() const;
  /// Largest exponent of variable i.
  int degree_in(int i) const;

  Polynomial monic() const;
  Polynomial scaled(Fp c) const;
  Polynomial times_monomial(const Monomial& m, Fp c) const;
  /// Re-sort the terms under another order of the same ring.
  Polynomial with_order(MonomialOrder o, int block = 0) const;
  /// Reinterpret in a ring with more (or permuted) variables: variable i goes to perm[i].
  Polynomial remap(const RingSpec& target, const std::vector<int>& perm) const;

  Fp evaluate(const std::vector<Fp>& point) const;
  Polynomial derivative(int i) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.ring_ == b.ring_ && a.terms_ == b.terms_;
  }

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);

  /// this - c*m*g, the reduction step.
  void sub_mul(const Polynomial& g, const Monomial& m, Fp c);

 private:
  friend Polynomial operator*(const Polynomial&, const Polynomial&);
  RingSpec ring_{};
  std::vector<Term> terms_;
};

Polynomial operator+(Polynomial a, const Polynomial& b);
Polynomial operator-(Polynomial a, const Polynomial& b);
Polynomial operator-(const Polynomial& a);
Polynomial operator*(const Polynomial& a, const Polynomial& b);
Polynomial pow(const Polynomial& a, int e);

std::string variable_name(int i);
std::string to_string(const Polynomial& f);

/// Grammar: expression := ['+'|'-'] term (('+'|'-') term)*;
/// term := coefficient? ('*'? factor)*; factor := variable ('^' exp)? | '(' expression ')' ('^' exp)?.
/// Variables are x0..x{n-1}; x, y, z, w alias the first four.
Polynomial parse(std::string_view text, const RingSpec& ring);

/// f(images): images live in a common target ring.
Polynomial substitute(const Polynomial& f, const std::vector<Polynomial>& images);

/// All monomials of degree t in decreasing order; empty for t < 0.
std::vector<Monomial> monomial_basis(const RingSpec& ring, int t);

std::uint64_t binomial(int n, int k);

/// Polynomials over a ring read from an ideal file:
/// header "ring: n_vars=<k> p=<prime>", '#' comments, one polynomial per line.
struct PolynomialList {
  RingSpec ring;
  std::vector<Polynomial> polys;
};
PolynomialList parse_ideal_file(std::string_view text);
std::string format_ideal_file(const RingSpec& ring, const std::vector<Polynomial>& polys);

}  // namespace raolab
