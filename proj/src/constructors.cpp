#include "raolab/constructors.hpp"

#include <set>
#include <string>

namespace raolab {

Fp random_element(const FieldSpec& f, std::mt19937_64& rng) { return static_cast<Fp>(rng() % f.p()); }

std::vector<Fp> random_vector(const FieldSpec& f, std::size_t n, std::mt19937_64& rng) {
  std::vector<Fp> v(n);
  for (auto& x : v) x = random_element(f, rng);
  return v;
}

std::vector<Fp> random_linear_form(const FieldSpec& f, int n, std::mt19937_64& rng) {
  for (;;) {
    auto v = random_vector(f, n, rng);
    for (Fp x : v)
      if (x != 0) return v;
  }
}

Component line_component(const std::vector<Fp>& a, const std::vector<Fp>& b) {
  Component c;
  c.kind = ComponentKind::Line;
  for (std::size_t i = 0; i < a.size(); ++i) c.param.push_back(BinaryForm::linear(a[i], b[i]));
  return c;
}

namespace {

Configuration empty_config(int n_vars, const FieldSpec& f, std::uint64_t seed, std::string recipe,
                           nlohmann::json params) {
  Configuration cfg;
  cfg.ambient = RingSpec(n_vars, f);
  cfg.seed = seed;
  cfg.recipe = std::move(recipe);
  cfg.params = std::move(params);
  return cfg;
}

bool skew_to_all(const Component& c, const Configuration& cfg, const FieldSpec& f) {
  for (const auto& o : cfg.components) {
    if (o.degree() == 1 && o.is_curve() && !lines_are_skew(c, o, f)) return false;
  }
  return true;
}

// Random line skew to every line already in cfg.
Component random_skew_line(const Configuration& cfg, std::mt19937_64& rng, const std::string& what) {
  const auto& f = cfg.ambient.field;
  for (int attempt = 0; attempt < 10; ++attempt) {
    Component c = line_component(random_vector(f, 4, rng), random_vector(f, 4, rng));
    if (skew_to_all(c, cfg, f)) return c;
  }
  throw DegenerateConfiguration(what + ": could not sample a skew line in 10 attempts");
}

bool on_quadric(const Component& c, const FieldSpec& f) {
  // x0 x3 - x1 x2 restricted through the parametrization.
  const BinaryForm q = add(multiply(c.param[0], c.param[3], f),
                           scale(multiply(c.param[1], c.param[2], f), f.neg(1), f), f);
  return q.is_zero();
}

}  // namespace

Configuration general_skew_lines(int r, std::uint64_t seed, FieldSpec f) {
  if (r < 1) throw std::invalid_argument("general_skew_lines: r must be at least 1");
  Configuration cfg = empty_config(4, f, seed, "general-skew-lines", {{"r", r}});
  std::mt19937_64 rng(seed);
  for (int i = 0; i < r; ++i) {
    Component c = random_skew_line(cfg, rng, "general_skew_lines");
    c.label = "general";
    cfg.components.push_back(std::move(c));
  }
  validate(cfg);
  return cfg;
}

Configuration quadric_ruling_lines(int r, std::uint64_t seed, FieldSpec f, int ruling) {
  if (r < 2) throw std::invalid_argument("quadric_ruling_lines: r must be at least 2");
  if (ruling != 0 && ruling != 1) throw std::invalid_argument("ruling must be 0 or 1");
  Configuration cfg = empty_config(4, f, seed, "quadric-ruling-lines", {{"r", r}, {"ruling", ruling}});
  std::mt19937_64 rng(seed);
  std::set<Fp> used;
  while (static_cast<int>(cfg.components.size()) < r) {
    const Fp c = random_element(f, rng);
    if (!used.insert(c).second) continue;
    Component line = ruling_line(c, ruling);
    line.label = "ruling";
    cfg.components.push_back(std::move(line));
  }
  validate(cfg);
  return cfg;
}

Configuration quadric_plus_general(int r_on_quadric, int n_general, std::uint64_t seed, FieldSpec f) {
  if (r_on_quadric < 2 || n_general < 0) throw std::invalid_argument("quadric_plus_general: bad sizes");
  Configuration cfg = quadric_ruling_lines(r_on_quadric, split_seed(seed, 0), f);
  cfg.seed = seed;
  cfg.recipe = "quadric-plus-general";
  cfg.params = {{"r", r_on_quadric}, {"n", n_general}};
  std::mt19937_64 rng(split_seed(seed, 1));
  for (int i = 0; i < n_general; ++i) {
    Component c;
    int attempt = 0;
    for (;; ++attempt) {
      if (attempt == 10) throw DegenerateConfiguration("quadric_plus_general: resampling exhausted");
      c = random_skew_line(cfg, rng, "quadric_plus_general");
      if (!on_quadric(c, f)) break;
    }
    c.label = "general";
    cfg.components.push_back(std::move(c));
  }
  validate(cfg);
  return cfg;
}

Configuration flat_fat_points_plane(int s, int m, std::uint64_t seed, FieldSpec f) {
  if (s < 1 || m < 1) throw std::invalid_argument("flat_fat_points_plane: s and m must be positive");
  Configuration cfg = empty_config(3, f, seed, "flat-fat-points", {{"s", s}, {"m", m}});
  std::mt19937_64 rng(seed);
  for (int i = 0; i < s; ++i) {
    std::vector<Fp> p, q;
    do {
      p = random_vector(f, 3, rng);
      q = random_vector(f, 3, rng);
    } while (rank(FieldMatrix(f, 2, 3, {p[0], p[1], p[2], q[0], q[1], q[2]})) < 2);
    Component c = line_component(p, q);
    c.kind = ComponentKind::FlatFat;
    c.multiplicity = m;
    cfg.components.push_back(std::move(c));
  }
  validate(cfg);
  return cfg;
}

Configuration rational_curve(int d, std::uint64_t seed, FieldSpec f) {
  if (d < 1) throw std::invalid_argument("rational_curve: degree must be positive");
  Configuration cfg = empty_config(4, f, seed, "rational-curve", {{"d", d}});
  std::mt19937_64 rng(seed);
  Component c;
  c.kind = ComponentKind::RationalCurve;
  c.param = random_base_point_free_forms(4, d, f, rng);
  cfg.components.push_back(std::move(c));
  validate(cfg);
  return cfg;
}

Configuration bidegree_curve_on_quadric(int a, int b, std::uint64_t seed, FieldSpec f) {
  if (a < 1 || b < 1) throw std::invalid_argument("bidegree must be positive");
  if (a != 1) throw Unsupported("bidegree (" + std::to_string(a) + "," + std::to_string(b) + "): only a = 1 is supported");
  Configuration cfg = empty_config(4, f, seed, "bidegree-on-quadric", {{"a", a}, {"b", b}});
  std::mt19937_64 rng(seed);
  const auto phi = random_base_point_free_forms(2, b, f, rng);
  const BinaryForm s = BinaryForm::linear(1, 0), u = BinaryForm::linear(0, 1);
  Component c;
  c.kind = ComponentKind::RationalCurve;
  // Segre of (s:u) and (phi0:phi1).
  c.param = {multiply(s, phi[0], f), multiply(s, phi[1], f), multiply(u, phi[0], f), multiply(u, phi[1], f)};
  c.label = "(" + std::to_string(a) + "," + std::to_string(b) + ")";
  cfg.components.push_back(std::move(c));
  validate(cfg);
  return cfg;
}

Configuration incident_line(const Configuration& base, int component, std::uint64_t seed) {
  if (component < 0 || component >= static_cast<int>(base.components.size()) ||
      !base.components[component].is_curve()) {
    throw std::invalid_argument("incident_line: no curve component " + std::to_string(component));
  }
  const auto& f = base.ambient.field;
  const int n = base.ambient.n_vars;
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 10; ++attempt) {
    Configuration cfg = base;
    const std::array<Fp, 2> p{1, random_element(f, rng)};
    const auto a = cfg.components[component].point_at(p[0], p[1], f);
    Component line = line_component(a, random_vector(f, n, rng));
    line.label = "incident";
    Node node;
    node.i = component;
    node.j = static_cast<int>(cfg.components.size());
    node.pi = p;
    node.pj = {1, 0};
    cfg.components.push_back(std::move(line));
    cfg.nodes.push_back(node);
    try {
      validate(cfg);
    } catch (const DegenerateConfiguration&) {
      continue;
    }
    return cfg;
  }
  throw DegenerateConfiguration("incident_line: resampling exhausted");
}

Configuration arithmetic_genus_zero(std::uint64_t seed, FieldSpec f) {
  Configuration cfg = bidegree_curve_on_quadric(1, 7, split_seed(seed, 0), f);
  cfg = incident_line(cfg, 0, split_seed(seed, 1));
  cfg = incident_line(cfg, 0, split_seed(seed, 2));
  cfg.seed = seed;
  cfg.recipe = "arith-genus-0";
  cfg.params = nlohmann::json::object();
  return cfg;
}

std::vector<std::string> recipe_names() {
  return {"general-skew-lines", "quadric-ruling-lines", "quadric-plus-general", "flat-fat-points",
          "rational-curve",     "bidegree-on-quadric",  "arith-genus-0"};
}

Configuration from_recipe(const std::string& recipe, const nlohmann::json& params, std::uint64_t seed,
                          FieldSpec f) {
  auto get = [&](const char* key) {
    if (!params.contains(key)) throw std::invalid_argument("recipe " + recipe + " needs parameter \"" + key + "\"");
    return params.at(key).get<int>();
  };
  if (recipe == "general-skew-lines") return general_skew_lines(get("r"), seed, f);
  if (recipe == "quadric-ruling-lines") return quadric_ruling_lines(get("r"), seed, f, params.value("ruling", 0));
  if (recipe == "quadric-plus-general") return quadric_plus_general(get("r"), get("n"), seed, f);
  if (recipe == "flat-fat-points") return flat_fat_points_plane(get("s"), get("m"), seed, f);
  if (recipe == "rational-curve") return rational_curve(get("d"), seed, f);
  if (recipe == "bidegree-on-quadric") return bidegree_curve_on_quadric(get("a"), get("b"), seed, f);
  if (recipe == "arith-genus-0") return arithmetic_genus_zero(seed, f);
  throw std::invalid_argument("unknown recipe '" + recipe + "'");
}

// ---------------------------------------------------------------------------

namespace {

Polynomial linear_poly(const RingSpec& ring, const std::vector<Fp>& coeffs) {
  Polynomial p(ring);
  for (int i = 0; i < ring.n_vars; ++i) {
    if (coeffs[i] != 0) p += Polynomial::variable(ring, i).scaled(coeffs[i]);
  }
  return p;
}

// Linear forms vanishing at every given point.
std::vector<Polynomial> linear_forms_through(const RingSpec& ring, const std::vector<std::vector<Fp>>& pts) {
  std::vector<Fp> e;
  for (const auto& p : pts) e.insert(e.end(), p.begin(), p.end());
  const FieldMatrix k = nullspace(FieldMatrix(ring.field, pts.size(), ring.n_vars, e));
  std::vector<Polynomial> out;
  for (std::size_t j = 0; j < k.cols(); ++j) {
    std::vector<Fp> c(ring.n_vars);
    for (int i = 0; i < ring.n_vars; ++i) c[i] = k(i, j);
    out.push_back(linear_poly(ring, c));
  }
  return out;
}

std::vector<Fp> column_of(const std::vector<BinaryForm>& param, int k) {
  std::vector<Fp> v;
  for (const auto& g : param) v.push_back(g.c[k]);
  return v;
}

}  // namespace

Ideal component_ideal(const Component& c, const RingSpec& ambient, std::uint64_t seed) {
  const auto& f = ambient.field;
  if (c.degree() == 1) {
    const auto p = column_of(c.param, 0), q = column_of(c.param, 1);
    auto gens = linear_forms_through(ambient, {p, q});
    if (c.kind == ComponentKind::FlatFat) {
      // h through p but not q, raised to the multiplicity.
      const auto through_p = linear_forms_through(ambient, {p});
      std::mt19937_64 rng(seed);
      for (;;) {
        Polynomial h(ambient);
        for (const auto& g : through_p) h += g.scaled(random_element(f, rng));
        if (h.evaluate(q) != 0) {
          gens.push_back(pow(h, c.multiplicity));
          break;
        }
      }
    }
    return Ideal(ambient, gens);
  }
  if (!c.is_curve()) throw Unsupported("component_ideal: flat fat points lie on lines");
  // Graph ideal x_i - phi_i(s, u) in (s, u, x...), then eliminate s, u.
  const int n = ambient.n_vars;
  const RingSpec big(n + 2, f);
  const int d = c.degree();
  std::vector<Polynomial> gens;
  for (int i = 0; i < n; ++i) {
    Polynomial g = Polynomial::variable(big, i + 2);
    for (int k = 0; k <= d; ++k) {
      if (c.param[i].c[k] == 0) continue;
      Monomial m;
      m.set(0, d - k);
      m.set(1, k);
      g -= Polynomial::monomial(big, m, c.param[i].c[k]);
    }
    gens.push_back(g);
  }
  std::vector<int> keep;
  for (int i = 0; i < n; ++i) keep.push_back(i + 2);
  Ideal e = eliminate(Ideal(big, gens), keep);
  if (!(e.ring() == ambient)) return Ideal(ambient, e.generators());
  return e;
}

Ideal configuration_ideal(const Configuration& cfg) {
  std::vector<Ideal> parts;
  for (std::size_t k = 0; k < cfg.components.size(); ++k) {
    parts.push_back(component_ideal(cfg.components[k], cfg.ambient, split_seed(cfg.seed, 1000 + k)));
  }
  return intersect(parts);
}

// ---------------------------------------------------------------------------

Specialization specialize_into_plane(const Configuration& lines, const std::vector<Fp>& L, int m, int k,
                                     std::uint64_t seed) {
  const auto& f = lines.ambient.field;
  if (k < 0 || k > static_cast<int>(lines.components.size())) {
    throw std::invalid_argument("specialize_into_plane: k out of range");
  }
  for (const auto& c : lines.components) {
    if (c.degree() != 1 || !c.is_curve()) throw Unsupported("specialize_into_plane: lines only");
  }
  const PlaneChart chart = plane_chart(L, f);
  std::mt19937_64 rng(seed);
  auto project = [&](const std::vector<Fp>& v) {
    std::vector<Fp> w(3, 0);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 4; ++j) w[i] = f.add(w[i], f.mul(chart.projection(i, j), v[j]));
    return w;
  };
  auto linear_param = [](const std::vector<Fp>& a, const std::vector<Fp>& b) {
    return line_component(a, b).param;
  };
  Specialization out{Scheme{RingSpec(3, f), {}}, Scheme{lines.ambient, {}}, Scheme{lines.ambient, {}}};
  for (int i = 0; i < static_cast<int>(lines.components.size()); ++i) {
    const auto& c = lines.components[i];
    const BinaryForm l = pull_back_linear(L, c.param, f);
    if (l.is_zero()) throw DegenerateSection("component " + std::to_string(i) + " lies in the plane");
    if (i < k) {
      // Meeting point with the plane, and a random second point of the plane.
      const auto p = c.point_at(f.neg(l.c[1]), l.c[0], f);
      std::vector<Fp> q;
      do {
        const auto y = random_vector(f, 3, rng);
        q.assign(4, 0);
        for (int r = 0; r < 4; ++r)
          for (int j = 0; j < 3; ++j) q[r] = f.add(q[r], f.mul(chart.basis(r, j), y[j]));
      } while (rank(FieldMatrix(f, 2, 4, {p[0], p[1], p[2], p[3], q[0], q[1], q[2], q[3]})) < 2);
      out.x1.pieces.push_back({linear_param(project(p), project(q)), BinaryForm::u_power(m)});
      out.x3.pieces.push_back({linear_param(p, q), BinaryForm::u_power(m)});
    } else {
      out.x1.pieces.push_back({linear_param(project(column_of(c.param, 0)), project(column_of(c.param, 1))), l});
      if (m > 1) out.x2.pieces.push_back({c.param, power(l, m - 1, f)});
      out.x3.pieces.push_back({c.param, power(l, m, f)});
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

LiaisonChain liaison_pipeline(std::uint64_t seed, FieldSpec f) {
  const RingSpec ring(4, f);
  const Ideal line(ring, {Polynomial::variable(ring, 0), Polynomial::variable(ring, 1)});
  const Ideal triple = power(line, 3);
  std::mt19937_64 rng(seed);
  const auto quadrics = monomial_basis(ring, 2);
  auto random_quintic = [&] {
    Polynomial g(ring);
    for (const auto& cubic : triple.generators()) {
      for (const auto& q : quadrics) g += cubic.times_monomial(q, random_element(f, rng));
    }
    return g;
  };
  const Polynomial F = random_quintic(), G = random_quintic();
  const Ideal ci(ring, {F, G});
  const Ideal c2 = quotient(ci, triple);
  LiaisonChain out;
  out.c3 = quotient(c2, power(line, 2));
  auto degree_of = [](const Ideal& I) {
    const auto h = hilbert_function(I, 0);
    return h.hilbert_polynomial ? h.hilbert_polynomial->degree : 0;
  };
  out.degree_c1 = degree_of(triple);
  out.degree_c2 = degree_of(c2);
  out.degree_c3 = degree_of(out.c3);
  out.quintics = static_cast<std::int64_t>(monomial_basis(ring, 5).size()) - quotient_dimension(out.c3, 5);
  out.smooth = is_smooth(out.c3, 2, split_seed(seed, 7));
  return out;
}

}  // namespace raolab
