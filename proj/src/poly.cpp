#include "raolab/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace raolab {

RingSpec::RingSpec(int n, FieldSpec f, MonomialOrder o, int blk)
    : n_vars(n), field(f), order(o), block(blk) {
  if (n < 1 || n > kMaxVars) {
    throw std::invalid_argument("ring must have between 1 and " + std::to_string(kMaxVars) +
                                " variables");
  }
  if (o == MonomialOrder::BlockElim && (blk < 0 || blk > n)) {
    throw std::invalid_argument("elimination block size out of range");
  }
  if (o != MonomialOrder::BlockElim) block = 0;
}

std::string order_name(MonomialOrder o, int block) {
  switch (o) {
    case MonomialOrder::GrevLex:
      return "grevlex";
    case MonomialOrder::Lex:
      return "lex";
    case MonomialOrder::BlockElim:
      return "block-elimination(" + std::to_string(block) + ")";
  }
  return "?";
}

Monomial Monomial::var(int i, int power) {
  Monomial m;
  m.set(i, power);
  return m;
}

void Monomial::set(int i, int v) {
  if (v < 0 || v > 255) throw std::out_of_range("exponent out of range");
  deg = static_cast<std::uint16_t>(deg - e[i] + v);
  e[i] = static_cast<std::uint8_t>(v);
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (int i = 0; i < kMaxVars; ++i) {
    const int v = a.e[i] + b.e[i];
    if (v > 255) throw std::out_of_range("exponent overflow");
    m.e[i] = static_cast<std::uint8_t>(v);
  }
  m.deg = static_cast<std::uint16_t>(a.deg + b.deg);
  return m;
}

bool divides(const Monomial& a, const Monomial& b) {
  if (a.deg > b.deg) return false;
  for (int i = 0; i < kMaxVars; ++i) {
    if (a.e[i] > b.e[i]) return false;
  }
  return true;
}

Monomial quotient(const Monomial& b, const Monomial& a) {
  Monomial m;
  for (int i = 0; i < kMaxVars; ++i) m.e[i] = static_cast<std::uint8_t>(b.e[i] - a.e[i]);
  m.deg = static_cast<std::uint16_t>(b.deg - a.deg);
  return m;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial m;
  int d = 0;
  for (int i = 0; i < kMaxVars; ++i) {
    m.e[i] = std::max(a.e[i], b.e[i]);
    d += m.e[i];
  }
  m.deg = static_cast<std::uint16_t>(d);
  return m;
}

bool coprime(const Monomial& a, const Monomial& b) {
  for (int i = 0; i < kMaxVars; ++i) {
    if (a.e[i] && b.e[i]) return false;
  }
  return true;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / i;
  return r;
}

// ---------------------------------------------------------------------------

Polynomial::Polynomial(RingSpec ring, std::vector<Term> terms) : ring_(ring) {
  const auto& f = ring_.field;
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return compare(a.m, b.m, ring_) > 0; });
  for (auto& t : terms) {
    t.c %= f.p();
    if (!terms_.empty() && terms_.back().m == t.m) {
      terms_.back().c = f.add(terms_.back().c, t.c);
    } else {
      terms_.push_back(t);
    }
  }
  std::erase_if(terms_, [](const Term& t) { return t.c == 0; });
}

Polynomial Polynomial::constant(RingSpec ring, Fp c) {
  return monomial(ring, Monomial::one(), c);
}

Polynomial Polynomial::variable(RingSpec ring, int i) {
  return monomial(ring, Monomial::var(i), 1);
}

Polynomial Polynomial::monomial(RingSpec ring, const Monomial& m, Fp c) {
  Polynomial p(ring);
  c %= ring.field.p();
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max<int>(d, t.m.deg);
  return d;
}

bool Polynomial::is_homogeneous() const {
  for (const auto& t : terms_) {
    if (t.m.deg != terms_.front().m.deg) return false;
  }
  return true;
}

int Polynomial::degree_in(int i) const {
  int d = 0;
  for (const auto& t : terms_) d = std::max<int>(d, t.m.e[i]);
  return d;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(ring_.field.inv(lead().c));
}

Polynomial Polynomial::scaled(Fp c) const {
  Polynomial r(ring_);
  c %= ring_.field.p();
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.m, ring_.field.mul(t.c, c)});
  return r;
}

Polynomial Polynomial::times_monomial(const Monomial& m, Fp c) const {
  Polynomial r(ring_);
  c %= ring_.field.p();
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.m * m, ring_.field.mul(t.c, c)});
  return r;
}

Polynomial Polynomial::with_order(MonomialOrder o, int block) const {
  return Polynomial(ring_.with_order(o, block), terms_);
}

Polynomial Polynomial::remap(const RingSpec& target, const std::vector<int>& perm) const {
  if (static_cast<int>(perm.size()) != ring_.n_vars) throw RingMismatch("remap: arity mismatch");
  if (!(target.field == ring_.field)) throw RingMismatch("remap: field mismatch");
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m;
    for (int i = 0; i < ring_.n_vars; ++i) {
      if (t.m.e[i] == 0) continue;
      if (perm[i] < 0 || perm[i] >= target.n_vars) throw RingMismatch("remap: variable dropped");
      m.set(perm[i], t.m.e[i]);
    }
    out.push_back({m, t.c});
  }
  return Polynomial(target, std::move(out));
}

Fp Polynomial::evaluate(const std::vector<Fp>& point) const {
  const auto& f = ring_.field;
  Fp acc = 0;
  for (const auto& t : terms_) {
    Fp v = t.c;
    for (int i = 0; i < ring_.n_vars && v; ++i) {
      if (t.m.e[i]) v = f.mul(v, f.pow(point[i], t.m.e[i]));
    }
    acc = f.add(acc, v);
  }
  return acc;
}

Polynomial Polynomial::derivative(int i) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    if (t.m.e[i] == 0) continue;
    Monomial m = t.m;
    m.set(i, t.m.e[i] - 1);
    out.push_back({m, ring_.field.mul(t.c, ring_.field.from_int(t.m.e[i]))});
  }
  return Polynomial(ring_, std::move(out));
}

namespace {

// Merge a + s*b where both are sorted decreasingly.
std::vector<Term> merge_axpy(const std::vector<Term>& a, const std::vector<Term>& b, Fp s,
                             const RingSpec& ring) {
  const auto& f = ring.field;
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int c;
    if (i == a.size()) {
      c = -1;
    } else if (j == b.size()) {
      c = 1;
    } else {
      c = compare(a[i].m, b[j].m, ring);
    }
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back({b[j].m, f.mul(b[j].c, s)});
      ++j;
    } else {
      const Fp v = f.add(a[i].c, f.mul(b[j].c, s));
      if (v) out.push_back({a[i].m, v});
      ++i;
      ++j;
    }
  }
  return out;
}

void require_same_ring(const Polynomial& a, const Polynomial& b) {
  if (!(a.ring() == b.ring())) throw RingMismatch("polynomials live in different rings");
}

}  // namespace

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  require_same_ring(*this, o);
  terms_ = merge_axpy(terms_, o.terms_, 1, ring_);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  require_same_ring(*this, o);
  terms_ = merge_axpy(terms_, o.terms_, ring_.field.neg(1), ring_);
  return *this;
}

void Polynomial::sub_mul(const Polynomial& g, const Monomial& m, Fp c) {
  const auto& f = ring_.field;
  std::vector<Term> shifted;
  shifted.reserve(g.terms_.size());
  for (const auto& t : g.terms_) shifted.push_back({t.m * m, t.c});
  terms_ = merge_axpy(terms_, shifted, f.neg(c), ring_);
}

Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
Polynomial operator-(const Polynomial& a) { return a.scaled(a.ring().field.neg(1)); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a, b);
  Polynomial r(a.ring());
  if (a.is_zero() || b.is_zero()) return r;
  const Polynomial& small = a.size() <= b.size() ? a : b;
  const Polynomial& big = a.size() <= b.size() ? b : a;
  for (const auto& t : small.terms()) {
    r.terms_ = merge_axpy(r.terms_, big.times_monomial(t.m, t.c).terms_, 1, a.ring());
  }
  return r;
}

Polynomial pow(const Polynomial& a, int e) {
  if (e < 0) throw std::invalid_argument("negative exponent");
  Polynomial r = Polynomial::constant(a.ring(), 1);
  Polynomial b = a;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

std::string variable_name(int i) { return "x" + std::to_string(i); }

std::string to_string(const Polynomial& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : f.terms()) {
    std::int64_t c = f.ring().field.lift(t.c);
    const bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    bool need_star = false;
    if (c != 1 || t.m.deg == 0) {
      os << c;
      need_star = true;
    }
    for (int i = 0; i < f.ring().n_vars; ++i) {
      if (t.m.e[i] == 0) continue;
      if (need_star) os << '*';
      os << variable_name(i);
      if (t.m.e[i] > 1) os << '^' << static_cast<int>(t.m.e[i]);
      need_star = true;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------

namespace {

class Parser {
 public:
  Parser(std::string_view s, const RingSpec& ring) : s_(s), ring_(ring) {}

  Polynomial run() {
    Polynomial p = expression();
    skip();
    if (pos_ != s_.size()) fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  bool at_variable() {
    const char c = peek();
    return c == 'x' || c == 'y' || c == 'z' || c == 'w';
  }

  Polynomial expression() {
    Polynomial acc(ring_);
    bool negate = false;
    if (peek() == '+' || peek() == '-') negate = s_[pos_++] == '-';
    Polynomial t = term();
    acc = negate ? acc - t : acc + t;
    while (peek() == '+' || peek() == '-') {
      negate = s_[pos_++] == '-';
      t = term();
      acc = negate ? acc - t : acc + t;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = Polynomial::constant(ring_, 1);
    bool any = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      acc = Polynomial::constant(ring_, integer_mod_p());
      any = true;
      if (peek() == '/') fail("rational coefficients are not supported");
    }
    for (;;) {
      const char c = peek();
      if (c == '*') {
        if (!any) fail("expected term");
        ++pos_;
        if (!at_variable() && peek() != '(') fail("expected factor after '*'");
      } else if (!(at_variable() || c == '(')) {
        break;
      }
      acc = acc * factor();
      any = true;
    }
    if (!any) fail("expected term");
    return acc;
  }

  Polynomial factor() {
    Polynomial base(ring_);
    if (peek() == '(') {
      ++pos_;
      base = expression();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
    } else {
      base = Polynomial::variable(ring_, variable());
    }
    if (peek() == '^') {
      ++pos_;
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
      const std::size_t start = pos_;
      long e = 0;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        e = e * 10 + (s_[pos_++] - '0');
        if (e > 255) {
          pos_ = start;
          fail("exponent too large");
        }
      }
      base = pow(base, static_cast<int>(e));
    }
    return base;
  }

  int variable() {
    const std::size_t start = pos_;
    const char c = s_[pos_++];
    int idx;
    if (c == 'x' && pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      idx = 0;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        idx = idx * 10 + (s_[pos_++] - '0');
        if (idx >= 100) break;
      }
    } else {
      idx = c == 'x' ? 0 : c == 'y' ? 1 : c == 'z' ? 2 : 3;
    }
    if (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_])) &&
        std::string_view("xyzw").find(s_[pos_]) == std::string_view::npos) {
      pos_ = start;
      fail("unknown variable");
    }
    if (idx >= ring_.n_vars) {
      pos_ = start;
      fail("unknown variable '" + std::string(s_.substr(start, pos_ - start + 1)) + "'");
    }
    return idx;
  }

  Fp integer_mod_p() {
    std::uint64_t v = 0;
    const std::uint64_t p = ring_.field.p();
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = (v * 10 + static_cast<std::uint64_t>(s_[pos_++] - '0')) % p;
    }
    return static_cast<Fp>(v);
  }

  std::string_view s_;
  const RingSpec& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse(std::string_view text, const RingSpec& ring) { return Parser(text, ring).run(); }

Polynomial substitute(const Polynomial& f, const std::vector<Polynomial>& images) {
  if (static_cast<int>(images.size()) != f.ring().n_vars) {
    throw std::invalid_argument("substitute: expected " + std::to_string(f.ring().n_vars) +
                                " images, got " + std::to_string(images.size()));
  }
  if (images.empty()) throw std::invalid_argument("substitute: no images");
  const RingSpec target = images.front().ring();
  int common = -2;
  for (const auto& g : images) {
    if (!(g.ring() == target)) throw RingMismatch("substitute: images in different rings");
    if (!g.is_homogeneous()) throw std::invalid_argument("substitute: inhomogeneous image");
    if (g.is_zero()) continue;
    if (common == -2) {
      common = g.degree();
    } else if (g.degree() != common) {
      throw std::invalid_argument("substitute: images of different degrees");
    }
  }
  std::vector<std::vector<Polynomial>> powers(images.size());
  for (std::size_t i = 0; i < images.size(); ++i) {
    powers[i].push_back(Polynomial::constant(target, 1));
    for (int e = 1; e <= f.degree_in(static_cast<int>(i)); ++e) {
      powers[i].push_back(powers[i].back() * images[i]);
    }
  }
  Polynomial out(target);
  for (const auto& t : f.terms()) {
    Polynomial v = Polynomial::constant(target, t.c);
    for (std::size_t i = 0; i < images.size() && !v.is_zero(); ++i) {
      if (t.m.e[i]) v = v * powers[i][t.m.e[i]];
    }
    out += v;
  }
  return out;
}

std::vector<Monomial> monomial_basis(const RingSpec& ring, int t) {
  std::vector<Monomial> out;
  if (t < 0) return out;
  Monomial m;
  // Enumerate compositions of t into n parts.
  auto rec = [&](auto&& self, int var, int left) -> void {
    if (var == ring.n_vars - 1) {
      m.set(var, left);
      out.push_back(m);
      m.set(var, 0);
      return;
    }
    for (int v = left; v >= 0; --v) {
      m.set(var, v);
      self(self, var + 1, left - v);
    }
    m.set(var, 0);
  };
  rec(rec, 0, t);
  std::sort(out.begin(), out.end(),
            [&](const Monomial& a, const Monomial& b) { return compare(a, b, ring) > 0; });
  return out;
}

// ---------------------------------------------------------------------------

PolynomialList parse_ideal_file(std::string_view text) {
  PolynomialList out;
  bool have_header = false;
  std::size_t line_start = 0;
  int line_no = 0;
  while (line_start <= text.size()) {
    std::size_t end = text.find('\n', line_start);
    if (end == std::string_view::npos) end = text.size();
    std::string line(text.substr(line_start, end - line_start));
    ++line_no;
    line_start = end + 1;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    if (line.find_first_not_of(" \t\r") == std::string::npos) {
      if (end == text.size()) break;
      continue;
    }
    if (!have_header) {
      const auto colon = line.find(':');
      if (colon == std::string::npos || line.substr(0, colon).find("ring") == std::string::npos) {
        throw ParseError("line " + std::to_string(line_no) + ": expected header 'ring: n_vars=<k> p=<prime>'", 0);
      }
      std::istringstream is(line.substr(colon + 1));
      std::string kv;
      int n = -1;
      long long p = -1;
      while (is >> kv) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos) continue;
        const auto key = kv.substr(0, eq);
        const auto val = kv.substr(eq + 1);
        if (key == "n_vars") n = std::stoi(val);
        if (key == "p") p = std::stoll(val);
      }
      if (n < 1 || p < 2) throw ParseError("line " + std::to_string(line_no) + ": incomplete ring header", 0);
      out.ring = RingSpec(n, FieldSpec(static_cast<std::uint32_t>(p)));
      have_header = true;
      continue;
    }
    try {
      out.polys.push_back(parse(line, out.ring));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what(), e.position());
    }
    if (end == text.size()) break;
  }
  if (!have_header) throw ParseError("missing ring header", 0);
  return out;
}

std::string format_ideal_file(const RingSpec& ring, const std::vector<Polynomial>& polys) {
  std::ostringstream os;
  os << "ring: n_vars=" << ring.n_vars << " p=" << ring.field.p() << '\n';
  for (const auto& f : polys) os << to_string(f) << '\n';
  return os.str();
}

}  // namespace raolab
