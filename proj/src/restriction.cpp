#include "raolab/restriction.hpp"

#include <algorithm>

namespace raolab {

namespace {

std::int64_t dim_forms(const RingSpec& ring, int t) {
  return static_cast<std::int64_t>(binomial(t + ring.n_vars - 1, ring.n_vars - 1));
}

}  // namespace

std::optional<std::int64_t> Scheme::degree() const {
  std::int64_t d = 0;
  for (const auto& p : pieces) {
    if (!p.divisor) return std::nullopt;
    d += p.divisor->degree();
  }
  return d;
}

FieldMatrix restriction_matrix(const std::vector<BinaryForm>& param, const RingSpec& ambient, int t) {
  const auto& f = ambient.field;
  const auto basis = monomial_basis(ambient, t);
  if (static_cast<int>(param.size()) != ambient.n_vars) {
    throw DimensionMismatch("parametrization arity differs from the ambient ring");
  }
  const int d = param.front().degree();
  std::vector<std::vector<BinaryForm>> powers(param.size());
  for (std::size_t i = 0; i < param.size(); ++i) {
    powers[i].push_back(BinaryForm{{1}});
    for (int e = 1; e <= t; ++e) powers[i].push_back(multiply(powers[i].back(), param[i], f));
  }
  FieldMatrix r(f, static_cast<std::size_t>(d * t + 1), basis.size());
  for (std::size_t col = 0; col < basis.size(); ++col) {
    BinaryForm v{{1}};
    for (std::size_t i = 0; i < param.size(); ++i) {
      const int e = basis[col].e[i];
      if (e) v = multiply(v, powers[i][e], f);
    }
    for (std::size_t k = 0; k < v.c.size(); ++k) r(k, col) = v.c[k];
  }
  return r;
}

FieldMatrix multiplication_matrix(const BinaryForm& g, int n, const FieldSpec& f) {
  const int e = g.degree();
  FieldMatrix m(f, static_cast<std::size_t>(n + e + 1), static_cast<std::size_t>(n + 1));
  for (int k = 0; k <= n; ++k)
    for (int j = 0; j <= e; ++j) m(k + j, k) = g.c[j];
  return m;
}

FieldMatrix condition_matrix(const Piece& piece, const RingSpec& ambient, int t) {
  FieldMatrix r = restriction_matrix(piece.param, ambient, t);
  if (!piece.divisor) return r;
  const int n = static_cast<int>(r.rows()) - 1;
  const int e = piece.divisor->degree();
  if (n < e) return r;
  // Functionals vanishing exactly on the multiples of the divisor.
  const FieldMatrix annihilator = left_nullspace(multiplication_matrix(*piece.divisor, n - e, ambient.field));
  return annihilator * r;
}

FieldMatrix condition_matrix(const Scheme& scheme, int t) {
  FieldMatrix all(scheme.ambient.field, 0, monomial_basis(scheme.ambient, t).size());
  for (const auto& p : scheme.pieces) all = vconcat(all, condition_matrix(p, scheme.ambient, t));
  return all;
}

std::int64_t ideal_dimension(const Scheme& scheme, int t) {
  if (t < 0) return 0;
  const FieldMatrix c = condition_matrix(scheme, t);
  return static_cast<std::int64_t>(c.cols() - rank(c));
}

std::vector<Polynomial> ideal_basis(const Scheme& scheme, int t) {
  std::vector<Polynomial> out;
  if (t < 0) return out;
  const auto basis = monomial_basis(scheme.ambient, t);
  const FieldMatrix k = nullspace(condition_matrix(scheme, t));
  for (std::size_t j = 0; j < k.cols(); ++j) {
    std::vector<Term> terms;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (k(i, j)) terms.push_back({basis[i], k(i, j)});
    }
    out.emplace_back(scheme.ambient, std::move(terms));
  }
  return out;
}

std::int64_t hilbert_value(const Scheme& scheme, int t) {
  if (t < 0) return 0;
  return dim_forms(scheme.ambient, t) - ideal_dimension(scheme, t);
}

std::vector<std::int64_t> h_vector(const Scheme& scheme) {
  const auto deg = scheme.degree();
  if (!deg) throw std::invalid_argument("h_vector: scheme is not zero-dimensional");
  std::vector<std::int64_t> h;
  std::int64_t prev = 0;
  for (int t = 0; prev < *deg; ++t) {
    if (t > *deg + 1) throw InternalInconsistency("h_vector: Hilbert function did not reach the degree");
    const std::int64_t v = hilbert_value(scheme, t);
    h.push_back(v - prev);
    prev = v;
  }
  return h;
}

Scheme scheme_of(const Configuration& cfg) {
  Scheme s{cfg.ambient, {}};
  for (const auto& c : cfg.components) {
    Piece p{c.param, std::nullopt};
    if (!c.is_curve()) p.divisor = BinaryForm::u_power(c.multiplicity);
    s.pieces.push_back(std::move(p));
  }
  return s;
}

std::int64_t ideal_dimension(const Configuration& cfg, int t) { return ideal_dimension(scheme_of(cfg), t); }

namespace {

BinaryForm section_form(const Component& c, const std::vector<Fp>& L, const FieldSpec& f, std::size_t index) {
  if (!c.is_curve()) throw Unsupported("section schemes are defined for curve components only");
  BinaryForm l = pull_back_linear(L, c.param, f);
  if (l.is_zero()) {
    throw DegenerateSection("the linear form vanishes on component " + std::to_string(index));
  }
  return l;
}

}  // namespace

Scheme section_scheme(const Configuration& cfg, const std::vector<Fp>& L, int m) {
  const auto& f = cfg.ambient.field;
  Scheme s{cfg.ambient, {}};
  for (std::size_t k = 0; k < cfg.components.size(); ++k) {
    const auto& c = cfg.components[k];
    s.pieces.push_back({c.param, power(section_form(c, L, f, k), m, f)});
  }
  return s;
}

PlaneChart plane_chart(const std::vector<Fp>& L, const FieldSpec& f) {
  const std::size_t n = L.size();
  const FieldMatrix row(f, 1, n, L);
  const FieldMatrix e = nullspace(row);
  if (e.cols() != n - 1) throw DegenerateSection("plane_chart: zero linear form");
  std::size_t pivot = 0;
  while (L[pivot] == 0) ++pivot;
  FieldMatrix aug(f, n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j + 1 < n; ++j) aug(i, j) = e(i, j);
    aug(i, n - 1) = i == pivot ? 1 : 0;
    aug(i, n + i) = 1;
  }
  row_reduce(aug);
  FieldMatrix proj(f, n - 1, n);
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = 0; j < n; ++j) proj(i, j) = aug(i, n + j);
  return {e, proj};
}

Scheme plane_section_scheme(const Configuration& cfg, const std::vector<Fp>& L) {
  const auto& f = cfg.ambient.field;
  const PlaneChart chart = plane_chart(L, f);
  const int n = cfg.ambient.n_vars;
  Scheme s{RingSpec(n - 1, f), {}};
  for (std::size_t k = 0; k < cfg.components.size(); ++k) {
    const auto& c = cfg.components[k];
    const BinaryForm g = section_form(c, L, f, k);
    std::vector<BinaryForm> param;
    for (int i = 0; i + 1 < n; ++i) {
      BinaryForm b = BinaryForm::zero(c.degree());
      for (int j = 0; j < n; ++j) b = add(b, scale(c.param[j], chart.projection(i, j), f), f);
      param.push_back(std::move(b));
    }
    s.pieces.push_back({std::move(param), g});
  }
  return s;
}

std::int64_t section_scheme_dimension(const Configuration& cfg, const std::vector<Fp>& L, int m, int t) {
  return ideal_dimension(section_scheme(cfg, L, m), t);
}

namespace {

// Rows: node conditions on the tuple space of degree-t forms on the curves.
FieldMatrix node_matrix(const Configuration& cfg, const std::vector<std::size_t>& offset,
                        const std::vector<int>& block_of, int t) {
  const auto& f = cfg.ambient.field;
  FieldMatrix nm(f, cfg.nodes.size(), offset.back());
  for (std::size_t r = 0; r < cfg.nodes.size(); ++r) {
    const auto& node = cfg.nodes[r];
    const int bi = block_of[node.i], bj = block_of[node.j];
    if (bi < 0 || bj < 0) throw Unsupported("nodes must join curve components");
    const int ni = cfg.components[node.i].degree() * t;
    const int nj = cfg.components[node.j].degree() * t;
    for (int k = 0; k <= ni; ++k) {
      nm(r, offset[bi] + k) = f.mul(f.pow(node.pi[0], ni - k), f.pow(node.pi[1], k));
    }
    const Fp ct = f.pow(node.scale, t);
    for (int k = 0; k <= nj; ++k) {
      const Fp v = f.mul(ct, f.mul(f.pow(node.pj[0], nj - k), f.pow(node.pj[1], k)));
      nm(r, offset[bj] + k) = f.sub(nm(r, offset[bj] + k), v);
    }
  }
  return nm;
}

struct Blocks {
  std::vector<int> curves;
  std::vector<int> block_of;
};

Blocks curve_blocks(const Configuration& cfg) {
  Blocks b;
  b.block_of.assign(cfg.components.size(), -1);
  for (std::size_t k = 0; k < cfg.components.size(); ++k) {
    if (!cfg.components[k].is_curve()) continue;
    b.block_of[k] = static_cast<int>(b.curves.size());
    b.curves.push_back(static_cast<int>(k));
  }
  return b;
}

std::vector<std::size_t> offsets(const Configuration& cfg, const std::vector<int>& curves, int t) {
  std::vector<std::size_t> off{0};
  for (int k : curves) off.push_back(off.back() + cfg.components[k].degree() * t + 1);
  return off;
}

}  // namespace

std::int64_t h0_structure_sheaf(const Configuration& cfg, int t) {
  if (t < 0) return 0;
  const Blocks b = curve_blocks(cfg);
  const auto off = offsets(cfg, b.curves, t);
  if (cfg.nodes.empty()) return static_cast<std::int64_t>(off.back());
  return static_cast<std::int64_t>(off.back() - rank(node_matrix(cfg, off, b.block_of, t)));
}

// ---------------------------------------------------------------------------

Presentation::Presentation(Configuration cfg) : cfg_(std::move(cfg)) {
  for (const auto& c : cfg_.components) {
    if (!c.is_curve()) throw Unsupported("presentations are defined for curve configurations");
  }
  curves_ = curve_blocks(cfg_).curves;
}

const Presentation::Degree& Presentation::at(int t) const {
  std::lock_guard<std::mutex> lock(mutex_);
  auto it = cache_.find(t);
  if (it != cache_.end()) return *it->second;
  const auto& f = cfg_.ambient.field;
  auto d = std::make_unique<Degree>();
  d->t = t;
  d->offset = offsets(cfg_, curves_, t);
  const std::size_t amb = d->offset.back();
  FieldMatrix w(f, 0, monomial_basis(cfg_.ambient, t).size());
  for (int k : curves_) w = vconcat(w, restriction_matrix(cfg_.components[k].param, cfg_.ambient, t));
  d->w = std::move(w);
  d->rank_w = rank(d->w);
  if (cfg_.nodes.empty()) {
    d->v_basis = FieldMatrix::identity(f, amb);
  } else {
    d->v_basis = nullspace(node_matrix(cfg_, d->offset, curve_blocks(cfg_).block_of, t));
  }
  d->dim_v = static_cast<std::int64_t>(d->v_basis.cols());
  d->dim_m = d->dim_v - static_cast<std::int64_t>(d->rank_w);
  const Degree& ref = *d;
  cache_.emplace(t, std::move(d));
  return ref;
}

FieldMatrix Presentation::block_multiply(const std::vector<BinaryForm>& factors, int t_from) const {
  const auto& f = cfg_.ambient.field;
  std::vector<FieldMatrix> blocks;
  std::size_t rows = 0, cols = 0;
  for (std::size_t b = 0; b < curves_.size(); ++b) {
    blocks.push_back(multiplication_matrix(factors[b], cfg_.components[curves_[b]].degree() * t_from, f));
    rows += blocks.back().rows();
    cols += blocks.back().cols();
  }
  FieldMatrix m(f, rows, cols);
  std::size_t r0 = 0, c0 = 0;
  for (const auto& blk : blocks) {
    for (std::size_t i = 0; i < blk.rows(); ++i)
      for (std::size_t j = 0; j < blk.cols(); ++j) m(r0 + i, c0 + j) = blk(i, j);
    r0 += blk.rows();
    c0 += blk.cols();
  }
  return m;
}

std::int64_t Presentation::multiplication_rank(const std::vector<Fp>& L, int m, int t) const {
  if (t - m < 0) return 0;
  const auto& f = cfg_.ambient.field;
  const Degree& src = at(t - m);
  const Degree& tgt = at(t);
  if (src.dim_m == 0 || tgt.dim_m == 0) return 0;
  std::vector<BinaryForm> factors;
  for (int k : curves_) {
    factors.push_back(power(section_form(cfg_.components[k], L, f, k), m, f));
  }
  const FieldMatrix image = block_multiply(factors, t - m) * src.v_basis;
  return static_cast<std::int64_t>(image_sum_dimension(image, tgt.w)) -
         static_cast<std::int64_t>(tgt.rank_w);
}

std::int64_t Presentation::socle_dimension(int t) const {
  const Degree& cur = at(t);
  if (cur.dim_m == 0) return 0;
  const Degree& next = at(t + 1);
  const auto& f = cfg_.ambient.field;
  const FieldMatrix annihilator = left_nullspace(next.w);
  FieldMatrix stacked(f, 0, cur.v_basis.cols());
  for (int i = 0; i < cfg_.ambient.n_vars; ++i) {
    std::vector<BinaryForm> factors;
    for (int k : curves_) factors.push_back(cfg_.components[k].param[i]);
    stacked = vconcat(stacked, annihilator * (block_multiply(factors, t) * cur.v_basis));
  }
  const std::int64_t kernel = cur.dim_v - static_cast<std::int64_t>(rank(stacked));
  return kernel - static_cast<std::int64_t>(cur.rank_w);
}

// ---------------------------------------------------------------------------

std::int64_t RaoProfile::dim(int t) const {
  auto it = dims.find(t);
  return it == dims.end() ? 0 : it->second;
}

std::optional<std::pair<int, int>> RaoProfile::support() const {
  std::optional<std::pair<int, int>> s;
  for (const auto& [t, d] : dims) {
    if (d == 0) continue;
    if (!s) s = std::make_pair(t, t);
    s->second = t;
  }
  return s;
}

std::int64_t RaoProfile::total_length() const {
  std::int64_t n = 0;
  for (const auto& [t, d] : dims) n += d;
  return n;
}

RaoProfile rao_profile(const Configuration& cfg, int min_horizon) {
  RaoProfile p;
  p.presentation = std::make_shared<const Presentation>(cfg);
  const Scheme curve = scheme_of(cfg);
  bool seen_positive = false;
  int zeros_after = 0;
  for (int t = 0;; ++t) {
    const std::int64_t formula = h0_structure_sheaf(cfg, t) - dim_forms(cfg.ambient, t) + ideal_dimension(curve, t);
    const std::int64_t pres = p.presentation->at(t).dim_m;
    if (formula != pres) {
      throw InternalInconsistency("Rao module dimension at t=" + std::to_string(t) + ": formula " +
                                  std::to_string(formula) + " vs presentation " + std::to_string(pres));
    }
    p.dims[t] = formula;
    if (formula > 0) {
      seen_positive = true;
      zeros_after = 0;
    } else if (seen_positive) {
      ++zeros_after;
    }
    p.horizon = t;
    if (t >= min_horizon && (!seen_positive || zeros_after >= 2)) break;
    if (t > 200) throw InternalInconsistency("Rao module did not vanish by degree 200");
  }
  return p;
}

void fill_socle(RaoProfile& profile) {
  for (const auto& [t, d] : profile.dims) {
    profile.socle[t] = d == 0 ? 0 : profile.presentation->socle_dimension(t);
  }
}

MultiplicationRank multiplication_rank(const RaoProfile& profile, const std::vector<Fp>& L, int m, int t) {
  const Configuration& cfg = profile.presentation->config();
  MultiplicationRank r;
  r.rank = profile.presentation->multiplication_rank(L, m, t);
  const std::int64_t section = t < 0 ? 0 : section_scheme_dimension(cfg, L, m, t);
  const std::int64_t on_thick_plane = section - dim_forms(cfg.ambient, t - m);
  const Scheme curve = scheme_of(cfg);
  r.kernel_formula = on_thick_plane - ideal_dimension(curve, t) + ideal_dimension(curve, t - m);
  const std::int64_t via_formula = profile.dim(t - m) - r.kernel_formula;
  if (via_formula != r.rank) {
    throw InternalInconsistency("rank of xL^" + std::to_string(m) + " at t=" + std::to_string(t) +
                                ": presentation " + std::to_string(r.rank) + " vs formula " +
                                std::to_string(via_formula));
  }
  return r;
}

}  // namespace raolab
