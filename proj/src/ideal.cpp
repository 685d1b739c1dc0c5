#include "raolab/ideal.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <random>

namespace raolab {

namespace {

std::atomic<std::uint64_t> g_budget{2'000'000};

std::uint32_t support_mask(const Monomial& m) {
  std::uint32_t s = 0;
  for (int i = 0; i < kMaxVars; ++i) {
    if (m.e[i]) s |= 1u << i;
  }
  return s;
}

// Working basis for Buchberger: monic polynomials with cached leading data.
struct WorkBasis {
  std::vector<Polynomial> polys;
  std::vector<Monomial> lead;
  std::vector<std::uint32_t> mask;
  std::vector<int> sugar;
  std::vector<char> active;

  void add(Polynomial p, int s) {
    lead.push_back(p.lead().m);
    mask.push_back(support_mask(p.lead().m));
    polys.push_back(std::move(p));
    sugar.push_back(s);
    active.push_back(1);
  }

  int find_reducer(const Monomial& m) const {
    const std::uint32_t ms = support_mask(m);
    for (std::size_t k = 0; k < polys.size(); ++k) {
      if (!active[k] || (mask[k] & ~ms) || lead[k].deg > m.deg) continue;
      if (divides(lead[k], m)) return static_cast<int>(k);
    }
    return -1;
  }
};

// p[from..] - c * m * g[1..], both sorted.
std::vector<Term> tail_sub(const std::vector<Term>& p, std::size_t from, const Polynomial& g,
                           const Monomial& m, Fp c, const RingSpec& ring) {
  const auto& f = ring.field;
  const Fp nc = f.neg(c);
  const auto& gt = g.terms();
  std::vector<Term> out;
  out.reserve(p.size() - from + gt.size());
  std::size_t i = from, j = 1;
  while (i < p.size() || j < gt.size()) {
    int cmp;
    Monomial gm;
    if (j < gt.size()) gm = gt[j].m * m;
    if (i == p.size()) {
      cmp = -1;
    } else if (j == gt.size()) {
      cmp = 1;
    } else {
      cmp = compare(p[i].m, gm, ring);
    }
    if (cmp > 0) {
      out.push_back(p[i++]);
    } else if (cmp < 0) {
      out.push_back({gm, f.mul(gt[j].c, nc)});
      ++j;
    } else {
      const Fp v = f.add(p[i].c, f.mul(gt[j].c, nc));
      if (v) out.push_back({gm, v});
      ++i;
      ++j;
    }
  }
  return out;
}

// Full reduction; basis elements are monic.
Polynomial reduce_by(const Polynomial& f, const WorkBasis& basis) {
  const RingSpec& ring = f.ring();
  std::vector<Term> p = f.terms();
  std::vector<Term> rem;
  std::size_t pos = 0;
  while (pos < p.size()) {
    const Term lt = p[pos];
    const int k = basis.find_reducer(lt.m);
    if (k < 0) {
      rem.push_back(lt);
      ++pos;
      continue;
    }
    p = tail_sub(p, pos + 1, basis.polys[k], quotient(lt.m, basis.lead[k]), lt.c, ring);
    pos = 0;
  }
  return Polynomial::from_sorted(ring, std::move(rem));
}

struct Pair {
  int i, j;
  Monomial lcm;
  int sugar;
};

Polynomial s_polynomial(const Polynomial& a, const Polynomial& b, const Monomial& l) {
  Polynomial s = a.times_monomial(quotient(l, a.lead().m), 1);
  s.sub_mul(b, quotient(l, b.lead().m), 1);
  return s;
}

int poly_sugar(const Polynomial& p) { return p.degree(); }

// Gebauer-Moeller update after adding basis element h.
void gm_update(WorkBasis& G, std::vector<Pair>& B, int h) {
  const Monomial& lh = G.lead[h];
  std::vector<Pair> C;
  for (int g = 0; g < h; ++g) {
    if (!G.active[g]) continue;
    const Monomial l = lcm(G.lead[g], lh);
    const int s = std::max(G.sugar[g] + l.deg - G.lead[g].deg, G.sugar[h] + l.deg - lh.deg);
    C.push_back({g, h, l, s});
  }
  // Chain criterion among the new pairs.
  std::vector<Pair> D;
  for (std::size_t a = 0; a < C.size(); ++a) {
    const Pair& p = C[a];
    bool keep = coprime(G.lead[p.i], lh);
    if (!keep) {
      keep = true;
      for (std::size_t b = a + 1; b < C.size() && keep; ++b) {
        if (divides(C[b].lcm, p.lcm)) keep = false;
      }
      for (const auto& q : D) {
        if (!keep) break;
        if (divides(q.lcm, p.lcm)) keep = false;
      }
    }
    if (keep) D.push_back(p);
  }
  std::vector<Pair> E;
  for (const auto& p : D) {
    if (!coprime(G.lead[p.i], lh)) E.push_back(p);
  }
  // Old pairs made redundant by h.
  std::vector<Pair> kept;
  kept.reserve(B.size() + E.size());
  for (const auto& p : B) {
    const bool redundant = divides(lh, p.lcm) && !(lcm(G.lead[p.i], lh) == p.lcm) &&
                           !(lcm(G.lead[p.j], lh) == p.lcm);
    if (!redundant) kept.push_back(p);
  }
  kept.insert(kept.end(), E.begin(), E.end());
  B = std::move(kept);
  for (int g = 0; g < h; ++g) {
    if (G.active[g] && divides(lh, G.lead[g])) G.active[g] = 0;
  }
}

std::size_t select_pair(const std::vector<Pair>& B, const RingSpec& ring) {
  std::size_t best = 0;
  for (std::size_t k = 1; k < B.size(); ++k) {
    const Pair& a = B[k];
    const Pair& b = B[best];
    if (a.sugar != b.sugar) {
      if (a.sugar < b.sugar) best = k;
    } else if (a.lcm.deg != b.lcm.deg) {
      if (a.lcm.deg < b.lcm.deg) best = k;
    } else if (compare(a.lcm, b.lcm, ring) < 0) {
      best = k;
    }
  }
  return best;
}

std::vector<Polynomial> interreduce(std::vector<Polynomial> polys, const RingSpec& ring) {
  std::sort(polys.begin(), polys.end(), [&](const Polynomial& a, const Polynomial& b) {
    return compare(a.lead().m, b.lead().m, ring) < 0;
  });
  // Minimal basis: drop elements whose leading monomial is divisible by another.
  std::vector<Polynomial> minimal;
  for (auto& p : polys) {
    bool redundant = false;
    for (const auto& q : minimal) {
      if (divides(q.lead().m, p.lead().m)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) minimal.push_back(std::move(p));
  }
  std::vector<Polynomial> out;
  out.reserve(minimal.size());
  for (std::size_t k = 0; k < minimal.size(); ++k) {
    WorkBasis others;
    for (std::size_t l = 0; l < minimal.size(); ++l) {
      if (l != k) others.add(minimal[l], 0);
    }
    // Leading term stays: no other leading monomial divides it.
    const Polynomial& p = minimal[k];
    Polynomial tail = Polynomial::from_sorted(
        ring, std::vector<Term>(p.terms().begin() + 1, p.terms().end()));
    Polynomial r = reduce_by(tail, others);
    std::vector<Term> terms{p.lead()};
    terms.insert(terms.end(), r.terms().begin(), r.terms().end());
    out.push_back(Polynomial::from_sorted(ring, std::move(terms)));
  }
  std::sort(out.begin(), out.end(), [&](const Polynomial& a, const Polynomial& b) {
    return compare(a.lead().m, b.lead().m, ring) > 0;
  });
  return out;
}

}  // namespace

std::uint64_t default_reduction_budget() { return g_budget.load(); }
void set_default_reduction_budget(std::uint64_t budget) { g_budget.store(budget); }

std::vector<Polynomial> buchberger(const std::vector<Polynomial>& generators, const RingSpec& ring,
                                   std::uint64_t budget) {
  WorkBasis G;
  std::vector<Pair> B;
  std::vector<Polynomial> input;
  for (const auto& g : generators) {
    if (!(g.ring() == ring)) throw RingMismatch("buchberger: generator in a different ring");
    if (!g.is_zero()) input.push_back(g.monic());
  }
  std::sort(input.begin(), input.end(), [](const Polynomial& a, const Polynomial& b) {
    return a.degree() < b.degree();
  });
  for (const auto& g : input) {
    Polynomial r = reduce_by(g, G);
    if (r.is_zero()) continue;
    if (r.is_constant()) return {Polynomial::constant(ring, 1)};
    const int s = std::max(poly_sugar(g), r.degree());
    G.add(r.monic(), s);
    gm_update(G, B, static_cast<int>(G.polys.size()) - 1);
  }
  std::uint64_t reductions = 0;
  while (!B.empty()) {
    const std::size_t k = select_pair(B, ring);
    const Pair p = B[k];
    B[k] = B.back();
    B.pop_back();
    if (++reductions > budget) {
      throw BudgetExceeded("Groebner basis: more than " + std::to_string(budget) +
                           " S-pair reductions");
    }
    Polynomial s = s_polynomial(G.polys[p.i], G.polys[p.j], p.lcm);
    Polynomial r = reduce_by(s, G);
    if (r.is_zero()) continue;
    if (r.is_constant()) return {Polynomial::constant(ring, 1)};
    G.add(r.monic(), std::max(p.sugar, r.degree()));
    gm_update(G, B, static_cast<int>(G.polys.size()) - 1);
  }
  std::vector<Polynomial> active;
  for (std::size_t k = 0; k < G.polys.size(); ++k) {
    if (G.active[k]) active.push_back(std::move(G.polys[k]));
  }
  return interreduce(std::move(active), ring);
}

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis) {
  WorkBasis G;
  for (const auto& g : basis) {
    if (!(g.ring() == f.ring())) throw RingMismatch("normal_form: basis in a different ring");
    if (!g.is_zero()) G.add(g.monic(), 0);
  }
  return reduce_by(f, G);
}

bool satisfies_buchberger_criterion(const std::vector<Polynomial>& basis) {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      const Monomial l = lcm(basis[i].lead().m, basis[j].lead().m);
      if (coprime(basis[i].lead().m, basis[j].lead().m)) continue;
      if (!normal_form(s_polynomial(basis[i].monic(), basis[j].monic(), l), basis).is_zero()) {
        return false;
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------------------

Ideal::Ideal(RingSpec ring, std::vector<Polynomial> generators)
    : ring_(ring), gens_(std::move(generators)) {
  for (const auto& g : gens_) {
    if (!(g.ring() == ring_)) throw RingMismatch("ideal generator in a different ring");
  }
  std::erase_if(gens_, [](const Polynomial& g) { return g.is_zero(); });
}

Ideal Ideal::unit(const RingSpec& ring) { return Ideal(ring, {Polynomial::constant(ring, 1)}); }
Ideal Ideal::zero(const RingSpec& ring) { return Ideal(ring, {}); }

Ideal Ideal::irrelevant(const RingSpec& ring) {
  std::vector<Polynomial> g;
  for (int i = 0; i < ring.n_vars; ++i) g.push_back(Polynomial::variable(ring, i));
  return Ideal(ring, std::move(g));
}

const std::vector<Polynomial>& Ideal::groebner_basis() const {
  std::call_once(cache_->once, [this] {
    cache_->basis = buchberger(gens_, ring_);
    cache_->ready = true;
  });
  return cache_->basis;
}

bool Ideal::has_cached_basis() const { return cache_->ready; }

bool Ideal::contains(const Polynomial& f) const {
  if (!(f.ring() == ring_)) throw RingMismatch("contains: polynomial in a different ring");
  return normal_form(f, groebner_basis()).is_zero();
}

bool Ideal::contains(const Ideal& other) const {
  for (const auto& g : other.generators()) {
    if (!contains(g)) return false;
  }
  return true;
}

bool Ideal::is_unit() const {
  const auto& gb = groebner_basis();
  return gb.size() == 1 && gb.front().is_constant();
}

bool Ideal::is_zero() const { return gens_.empty(); }

Ideal groebner(const Ideal& ideal, MonomialOrder order, int block) {
  const RingSpec r = ideal.ring().with_order(order, block);
  std::vector<Polynomial> g;
  for (const auto& p : ideal.generators()) g.push_back(p.with_order(order, block));
  Ideal out(r, std::move(g));
  out.groebner_basis();
  return out;
}

Ideal operator+(const Ideal& a, const Ideal& b) {
  if (!(a.ring() == b.ring())) throw RingMismatch("ideal sum: different rings");
  auto g = a.generators();
  g.insert(g.end(), b.generators().begin(), b.generators().end());
  return Ideal(a.ring(), std::move(g));
}

Ideal operator*(const Ideal& a, const Ideal& b) {
  if (!(a.ring() == b.ring())) throw RingMismatch("ideal product: different rings");
  std::vector<Polynomial> g;
  for (const auto& p : a.generators())
    for (const auto& q : b.generators()) g.push_back(p * q);
  return Ideal(a.ring(), std::move(g));
}

Ideal power(const Ideal& a, int k) {
  if (k < 0) throw std::invalid_argument("negative ideal power");
  Ideal r = Ideal::unit(a.ring());
  for (int i = 0; i < k; ++i) {
    r = r * a;
    // Keep the generator list small.
    r = Ideal(a.ring(), r.groebner_basis());
  }
  return r;
}

bool operator==(const Ideal& a, const Ideal& b) {
  if (!(a.ring() == b.ring())) return false;
  return a.groebner_basis() == b.groebner_basis();
}

// ---------------------------------------------------------------------------
// Hilbert series of monomial ideals.

namespace {

using IntPoly = std::vector<std::int64_t>;

void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

IntPoly mul(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  trim(c);
  return c;
}

IntPoly add_shifted(IntPoly a, const IntPoly& b, int shift) {
  if (a.size() < b.size() + shift) a.resize(b.size() + shift, 0);
  for (std::size_t j = 0; j < b.size(); ++j) a[j + shift] += b[j];
  trim(a);
  return a;
}

std::vector<Monomial> minimize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(),
            [](const Monomial& a, const Monomial& b) { return a.deg < b.deg; });
  std::vector<Monomial> out;
  for (const auto& g : gens) {
    bool redundant = false;
    for (const auto& h : out) {
      if (divides(h, g)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) out.push_back(g);
  }
  return out;
}

IntPoly numerator_rec(std::vector<Monomial> gens) {
  gens = minimize(std::move(gens));
  if (gens.empty()) return {1};
  if (gens.front().deg == 0) return {};
  bool pairwise_coprime = true;
  for (std::size_t a = 0; a < gens.size() && pairwise_coprime; ++a)
    for (std::size_t b = a + 1; b < gens.size() && pairwise_coprime; ++b)
      if (!coprime(gens[a], gens[b])) pairwise_coprime = false;
  if (pairwise_coprime) {
    IntPoly r{1};
    for (const auto& g : gens) {
      IntPoly f(g.deg + 1, 0);
      f[0] = 1;
      f[g.deg] = -1;
      r = mul(r, f);
    }
    return r;
  }
  // Pivot on the variable shared by most generators, at its smallest
  // exponent; both branches are then strictly smaller.
  int best = 0, best_count = -1;
  for (int i = 0; i < kMaxVars; ++i) {
    int c = 0;
    for (const auto& g : gens) c += g.e[i] > 0;
    if (c > best_count) {
      best_count = c;
      best = i;
    }
  }
  int e = 255;
  for (const auto& g : gens) {
    if (g.e[best]) e = std::min<int>(e, g.e[best]);
  }
  const Monomial pivot = Monomial::var(best, e);
  // N(I) = N(I + (pivot)) + z^e N(I : pivot).
  std::vector<Monomial> with_pivot = gens;
  with_pivot.push_back(pivot);
  std::vector<Monomial> colon;
  colon.reserve(gens.size());
  for (const auto& g : gens) {
    Monomial q = g;
    q.set(best, std::max(0, g.e[best] - e));
    colon.push_back(q);
  }
  return add_shifted(numerator_rec(std::move(with_pivot)), numerator_rec(std::move(colon)), e);
}

std::vector<Monomial> leading_monomials(const Ideal& ideal) {
  std::vector<Monomial> lm;
  for (const auto& g : ideal.groebner_basis()) lm.push_back(g.lead().m);
  return lm;
}

std::int64_t count_standard(const std::vector<Monomial>& lm, const RingSpec& ring, int t) {
  std::int64_t n = 0;
  for (const auto& m : monomial_basis(ring, t)) {
    bool standard = true;
    for (const auto& g : lm) {
      if (divides(g, m)) {
        standard = false;
        break;
      }
    }
    n += standard;
  }
  return n;
}

}  // namespace

std::vector<std::int64_t> hilbert_numerator(const std::vector<Monomial>& generators, int n_vars) {
  (void)n_vars;
  return numerator_rec(generators);
}

std::int64_t quotient_dimension(const Ideal& ideal, int t) {
  if (t < 0) return 0;
  return count_standard(leading_monomials(ideal), ideal.ring(), t);
}

HilbertData hilbert_function(const Ideal& ideal, int t_max) {
  for (const auto& g : ideal.generators()) {
    if (!g.is_homogeneous()) throw std::invalid_argument("hilbert_function: inhomogeneous ideal");
  }
  const RingSpec& ring = ideal.ring();
  const auto lm = leading_monomials(ideal);
  HilbertData h;
  for (int t = 0; t <= t_max; ++t) {
    const std::int64_t q = count_standard(lm, ring, t);
    h.dims_quotient[t] = q;
    h.dims_ideal[t] = static_cast<std::int64_t>(binomial(t + ring.n_vars - 1, ring.n_vars - 1)) - q;
  }
  IntPoly num = hilbert_numerator(lm, ring.n_vars);
  int k = 0;  // factors of (1 - z) divided out
  while (!num.empty() && std::accumulate(num.begin(), num.end(), std::int64_t{0}) == 0) {
    // Synthetic division by (1 - z): q_i = sum_{j<=i} a_j.
    IntPoly q(num.size() - 1);
    std::int64_t acc = 0;
    for (std::size_t i = 0; i + 1 < num.size(); ++i) {
      acc += num[i];
      q[i] = acc;
    }
    num = std::move(q);
    trim(num);
    ++k;
  }
  h.h_polynomial = num;
  h.krull_dim = num.empty() ? 0 : ring.n_vars - k;
  if (!num.empty() && h.krull_dim >= 1) {
    h.hilbert_polynomial = HilbertPolynomialInfo{
        std::accumulate(num.begin(), num.end(), std::int64_t{0}), h.krull_dim - 1};
  }
  if (h.krull_dim == 1) h.h_vector = num;
  return h;
}

nlohmann::json to_json(const HilbertData& data) {
  nlohmann::json j;
  nlohmann::json dq = nlohmann::json::object();
  for (const auto& [t, d] : data.dims_quotient) dq[std::to_string(t)] = d;
  j["dims_quotient"] = dq;
  j["h_vector"] = data.h_vector;
  j["krull_dim"] = data.krull_dim;
  if (data.hilbert_polynomial) {
    j["degree"] = data.hilbert_polynomial->degree;
    j["dim"] = data.hilbert_polynomial->dim;
  } else {
    j["degree"] = 0;
    j["dim"] = -1;
  }
  return j;
}

// ---------------------------------------------------------------------------

Polynomial divide_exact(const Polynomial& f, const Polynomial& g) {
  if (g.is_zero()) throw std::invalid_argument("divide_exact: division by zero");
  const auto& field = f.ring().field;
  const Fp inv = field.inv(g.lead().c);
  Polynomial r = f;
  std::vector<Term> q;
  while (!r.is_zero()) {
    const Term lt = r.lead();
    if (!divides(g.lead().m, lt.m)) throw std::invalid_argument("divide_exact: not divisible");
    const Monomial m = quotient(lt.m, g.lead().m);
    const Fp c = field.mul(lt.c, inv);
    q.push_back({m, c});
    r.sub_mul(g, m, c);
  }
  return Polynomial::from_sorted(f.ring(), std::move(q));
}

Ideal intersect(const Ideal& a, const Ideal& b) {
  if (!(a.ring() == b.ring())) throw RingMismatch("intersect: different rings");
  const RingSpec& ring = a.ring();
  if (a.is_zero() || b.is_zero()) return Ideal::zero(ring);
  if (ring.n_vars + 1 > kMaxVars) throw std::invalid_argument("intersect: too many variables");
  // t*I + (1 - t)*J in k[t, x], t eliminated first.
  const RingSpec big(ring.n_vars + 1, ring.field, MonomialOrder::BlockElim, 1);
  std::vector<int> shift(ring.n_vars);
  std::iota(shift.begin(), shift.end(), 1);
  const Polynomial t = Polynomial::variable(big, 0);
  const Polynomial one_minus_t = Polynomial::constant(big, 1) - t;
  std::vector<Polynomial> gens;
  for (const auto& f : a.generators()) gens.push_back(t * f.remap(big, shift));
  for (const auto& f : b.generators()) gens.push_back(one_minus_t * f.remap(big, shift));
  const auto gb = buchberger(gens, big);
  std::vector<int> back(ring.n_vars + 1, -1);
  for (int i = 0; i < ring.n_vars; ++i) back[i + 1] = i;
  std::vector<Polynomial> out;
  for (const auto& g : gb) {
    if (g.degree_in(0) == 0) out.push_back(g.remap(ring, back));
  }
  return Ideal(ring, std::move(out));
}

Ideal intersect(const std::vector<Ideal>& ideals) {
  if (ideals.empty()) throw std::invalid_argument("intersect: empty list");
  Ideal r = ideals.front();
  for (std::size_t k = 1; k < ideals.size(); ++k) r = intersect(r, ideals[k]);
  return r;
}

Ideal quotient_by_intersection(const Ideal& ideal, const Polynomial& g) {
  const RingSpec& ring = ideal.ring();
  if (g.is_zero()) return Ideal::unit(ring);
  const Ideal meet = intersect(ideal, Ideal(ring, {g}));
  std::vector<Polynomial> out;
  for (const auto& f : meet.groebner_basis()) out.push_back(divide_exact(f, g));
  return Ideal(ring, std::move(out));
}

namespace {

bool all_homogeneous(const Ideal& ideal) {
  for (const auto& g : ideal.generators()) {
    if (!g.is_homogeneous()) return false;
  }
  return true;
}

// I : x_v for homogeneous I. Under grevlex with x_v last, x_v divides the
// leading monomial of a homogeneous g only if it divides g, so dividing each
// basis element by x_v (where possible) yields a basis of the colon.
Ideal colon_variable(const Ideal& ideal, int v) {
  const RingSpec& ring = ideal.ring();
  const int last = ring.n_vars - 1;
  std::vector<int> swap(ring.n_vars);
  std::iota(swap.begin(), swap.end(), 0);
  std::swap(swap[v], swap[last]);
  const RingSpec grev = ring.with_order(MonomialOrder::GrevLex);
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.remap(grev, swap));
  const auto gb = buchberger(gens, grev);
  std::vector<Polynomial> out;
  for (const auto& g : gb) {
    const bool divisible =
        std::all_of(g.terms().begin(), g.terms().end(), [&](const Term& t) { return t.m.e[last] > 0; });
    std::vector<Term> terms = g.terms();
    if (divisible) {
      for (auto& t : terms) t.m.set(last, t.m.e[last] - 1);
    }
    out.push_back(Polynomial::from_sorted(grev, std::move(terms)).remap(ring, swap));
  }
  return Ideal(ring, std::move(out));
}

}  // namespace

Ideal quotient(const Ideal& ideal, const Polynomial& g) {
  const RingSpec& ring = ideal.ring();
  if (!(g.ring() == ring)) throw RingMismatch("quotient: polynomial in a different ring");
  if (g.is_zero()) return Ideal::unit(ring);
  if (g.size() == 1 && all_homogeneous(ideal)) {
    Ideal r = ideal;
    for (int v = 0; v < ring.n_vars; ++v) {
      for (int k = 0; k < g.lead().m.e[v]; ++k) r = colon_variable(r, v);
    }
    return r;
  }
  return quotient_by_intersection(ideal, g);
}

Ideal quotient(const Ideal& ideal, const Ideal& other) {
  if (!(ideal.ring() == other.ring())) throw RingMismatch("quotient: different rings");
  if (other.is_zero()) return Ideal::unit(ideal.ring());
  std::vector<Ideal> parts;
  for (const auto& g : other.generators()) parts.push_back(quotient(ideal, g));
  return intersect(parts);
}

Saturation saturate(const Ideal& ideal, const Ideal& other) {
  Saturation s{ideal, 0};
  const RingSpec& ring = ideal.ring();
  const bool by_irrelevant = other == Ideal::irrelevant(ring);
  while (true) {
    if (s.ideal.is_unit()) return s;
    if (by_irrelevant && all_homogeneous(s.ideal)) {
      // m-primary: the saturation is the unit ideal and each colon step
      // lowers the top nonzero degree of R/I by one.
      const HilbertData h = hilbert_function(s.ideal, 0);
      if (h.krull_dim == 0) {
        int top = static_cast<int>(h.h_polynomial.size()) - 1;
        s.index += top + 1;
        s.ideal = Ideal::unit(ring);
        return s;
      }
    }
    Ideal next = quotient(s.ideal, other);
    next = Ideal(ring, next.groebner_basis());
    if (next == s.ideal) return s;
    s.ideal = std::move(next);
    ++s.index;
  }
}

Ideal eliminate(const Ideal& ideal, const std::vector<int>& keep) {
  const RingSpec& ring = ideal.ring();
  std::vector<char> kept(ring.n_vars, 0);
  for (int v : keep) {
    if (v < 0 || v >= ring.n_vars) throw std::invalid_argument("eliminate: variable out of range");
    kept[v] = 1;
  }
  std::vector<int> order;  // eliminated first, then kept
  for (int v = 0; v < ring.n_vars; ++v)
    if (!kept[v]) order.push_back(v);
  const int block = static_cast<int>(order.size());
  for (int v = 0; v < ring.n_vars; ++v)
    if (kept[v]) order.push_back(v);
  if (block == ring.n_vars) throw std::invalid_argument("eliminate: nothing kept");
  std::vector<int> perm(ring.n_vars);
  for (int k = 0; k < ring.n_vars; ++k) perm[order[k]] = k;
  const RingSpec elim(ring.n_vars, ring.field, MonomialOrder::BlockElim, block);
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.remap(elim, perm));
  const auto gb = buchberger(gens, elim);
  const RingSpec sub(ring.n_vars - block, ring.field);
  std::vector<int> back(ring.n_vars, -1);
  for (int k = block; k < ring.n_vars; ++k) back[k] = k - block;
  std::vector<Polynomial> out;
  for (const auto& g : gb) {
    bool free = true;
    for (const auto& t : g.terms()) {
      for (int k = 0; k < block && free; ++k) free = t.m.e[k] == 0;
    }
    if (free) out.push_back(g.remap(sub, back));
  }
  return Ideal(sub, std::move(out));
}

namespace {

Polynomial determinant(const std::vector<std::vector<Polynomial>>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  Polynomial det(m[0][0].ring());
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<Polynomial>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Polynomial> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(std::move(row));
    }
    const Polynomial term = m[0][c] * determinant(minor);
    if (c % 2 == 0) {
      det += term;
    } else {
      det -= term;
    }
  }
  return det;
}

void combinations(int n, int k, std::vector<std::vector<int>>& out) {
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i < n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
}

std::vector<Polynomial> jacobian_minors(const Ideal& ideal, int codim) {
  const RingSpec& ring = ideal.ring();
  const auto& gens = ideal.generators();
  std::vector<std::vector<Polynomial>> jac;
  for (const auto& g : gens) {
    std::vector<Polynomial> row;
    for (int v = 0; v < ring.n_vars; ++v) row.push_back(g.derivative(v));
    jac.push_back(std::move(row));
  }
  std::vector<std::vector<int>> rows, cols;
  combinations(static_cast<int>(gens.size()), codim, rows);
  combinations(ring.n_vars, codim, cols);
  std::vector<Polynomial> minors;
  for (const auto& r : rows) {
    for (const auto& c : cols) {
      std::vector<std::vector<Polynomial>> sub;
      for (int i : r) {
        std::vector<Polynomial> row;
        for (int j : c) row.push_back(jac[i][j]);
        sub.push_back(std::move(row));
      }
      Polynomial d = determinant(sub);
      if (!d.is_zero()) minors.push_back(std::move(d));
    }
  }
  return minors;
}

bool singular_locus_empty(const Ideal& ideal, const std::vector<Polynomial>& minors) {
  Ideal sing = ideal + Ideal(ideal.ring(), minors);
  const Ideal gb(ideal.ring(), sing.groebner_basis());
  return saturate(gb, Ideal::irrelevant(ideal.ring())).ideal.is_unit();
}

}  // namespace

Ideal singular_locus(const Ideal& ideal, int codim) {
  if (codim < 1 || codim > ideal.ring().n_vars) throw std::invalid_argument("singular_locus: codim");
  return ideal + Ideal(ideal.ring(), jacobian_minors(ideal, codim));
}

bool is_smooth(const Ideal& ideal, int codim, std::uint64_t seed) {
  const Ideal base(ideal.ring(), ideal.groebner_basis());
  const auto minors = jacobian_minors(base, codim);
  // A few random combinations of the minors in each degree; an empty locus
  // for them already certifies smoothness.
  std::mt19937_64 rng(seed);
  std::map<int, std::vector<Polynomial>> by_degree;
  for (const auto& m : minors) by_degree[m.degree()].push_back(m);
  std::vector<Polynomial> mixed;
  const auto& field = ideal.ring().field;
  for (const auto& [deg, group] : by_degree) {
    const std::size_t count = std::min<std::size_t>(group.size(), ideal.ring().n_vars + 1);
    for (std::size_t k = 0; k < count; ++k) {
      Polynomial combo(ideal.ring());
      for (const auto& m : group) combo += m.scaled(static_cast<Fp>(rng() % field.p()));
      if (!combo.is_zero()) mixed.push_back(std::move(combo));
    }
  }
  if (singular_locus_empty(base, mixed)) return true;
  return singular_locus_empty(base, minors);
}

nlohmann::json to_json(const Ideal& ideal) {
  nlohmann::json j;
  j["n_vars"] = ideal.ring().n_vars;
  j["p"] = ideal.ring().field.p();
  j["order"] = order_name(ideal.ring().order, ideal.ring().block);
  std::vector<std::string> g;
  for (const auto& f : ideal.generators()) g.push_back(to_string(f));
  j["generators"] = g;
  if (ideal.has_cached_basis()) {
    std::vector<std::string> b;
    for (const auto& f : ideal.groebner_basis()) b.push_back(to_string(f));
    j["groebner_basis"] = b;
  }
  return j;
}

}  // namespace raolab
