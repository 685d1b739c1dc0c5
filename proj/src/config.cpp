#include "raolab/config.hpp"

#include <algorithm>

#include "raolab/matrix.hpp"

namespace raolab {

bool BinaryForm::is_zero() const {
  return std::all_of(c.begin(), c.end(), [](Fp v) { return v == 0; });
}

BinaryForm BinaryForm::u_power(int k) {
  BinaryForm b = zero(k);
  b.c[k] = 1;
  return b;
}

BinaryForm multiply(const BinaryForm& a, const BinaryForm& b, const FieldSpec& f) {
  BinaryForm r = BinaryForm::zero(a.degree() + b.degree());
  const std::uint64_t p = f.p();
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j) {
      r.c[i + j] = static_cast<Fp>((r.c[i + j] + static_cast<std::uint64_t>(a.c[i]) * b.c[j]) % p);
    }
  }
  return r;
}

BinaryForm power(const BinaryForm& a, int e, const FieldSpec& f) {
  BinaryForm r{{1}};
  for (int k = 0; k < e; ++k) r = multiply(r, a, f);
  return r;
}

BinaryForm add(const BinaryForm& a, const BinaryForm& b, const FieldSpec& f) {
  if (a.degree() != b.degree()) throw std::invalid_argument("adding binary forms of different degrees");
  BinaryForm r = a;
  for (std::size_t k = 0; k < r.c.size(); ++k) r.c[k] = f.add(r.c[k], b.c[k]);
  return r;
}

BinaryForm scale(const BinaryForm& a, Fp c, const FieldSpec& f) {
  BinaryForm r = a;
  for (auto& v : r.c) v = f.mul(v, c);
  return r;
}

Fp evaluate(const BinaryForm& a, Fp s, Fp u, const FieldSpec& f) {
  const int d = a.degree();
  Fp acc = 0;
  for (int k = 0; k <= d; ++k) {
    acc = f.add(acc, f.mul(a.c[k], f.mul(f.pow(s, d - k), f.pow(u, k))));
  }
  return acc;
}

namespace {

using Univariate = std::vector<Fp>;  // low degree first

void trim(Univariate& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Univariate remainder(Univariate a, const Univariate& b, const FieldSpec& f) {
  const Fp inv = f.inv(b.back());
  while (a.size() >= b.size()) {
    const Fp q = f.mul(a.back(), inv);
    const std::size_t shift = a.size() - b.size();
    for (std::size_t k = 0; k < b.size(); ++k) a[shift + k] = f.sub(a[shift + k], f.mul(q, b[k]));
    trim(a);
  }
  return a;
}

Univariate gcd(Univariate a, Univariate b, const FieldSpec& f) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Univariate r = remainder(a, b, f);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

}  // namespace

bool have_common_root(const std::vector<BinaryForm>& forms, const FieldSpec& f) {
  std::vector<Univariate> polys;
  bool all_vanish_at_1_0 = true;
  for (const auto& g : forms) {
    if (g.is_zero()) continue;
    if (g.c.front() != 0) all_vanish_at_1_0 = false;
    // Dehomogenize at s = 1: roots u are the points (1, u); a drop in
    // degree means a root at (0, 1).
    polys.push_back(g.c);
  }
  if (polys.empty()) return true;
  if (all_vanish_at_1_0) return true;
  bool all_vanish_at_0_1 = true;
  for (const auto& g : forms) {
    if (!g.is_zero() && g.c.back() != 0) all_vanish_at_0_1 = false;
  }
  if (all_vanish_at_0_1) return true;
  Univariate g = polys.front();
  for (std::size_t k = 1; k < polys.size(); ++k) g = gcd(g, polys[k], f);
  trim(g);
  return g.size() > 1;
}

std::vector<BinaryForm> random_base_point_free_forms(int n, int d, const FieldSpec& f,
                                                     std::mt19937_64& rng) {
  for (int attempt = 0; attempt < 10; ++attempt) {
    std::vector<BinaryForm> forms;
    for (int i = 0; i < n; ++i) {
      BinaryForm b = BinaryForm::zero(d);
      for (auto& v : b.c) v = static_cast<Fp>(rng() % f.p());
      forms.push_back(std::move(b));
    }
    if (!have_common_root(forms, f)) return forms;
  }
  throw DegenerateConfiguration("could not sample base-point-free forms of degree " +
                                std::to_string(d));
}

BinaryForm pull_back_linear(const std::vector<Fp>& l, const std::vector<BinaryForm>& param,
                            const FieldSpec& f) {
  if (l.size() != param.size()) throw std::invalid_argument("linear form arity mismatch");
  BinaryForm r = BinaryForm::zero(param.front().degree());
  for (std::size_t i = 0; i < l.size(); ++i) r = add(r, scale(param[i], l[i], f), f);
  return r;
}

std::string kind_name(ComponentKind k) {
  switch (k) {
    case ComponentKind::Line:
      return "line";
    case ComponentKind::RulingLine:
      return "ruling-line";
    case ComponentKind::RationalCurve:
      return "rational";
    case ComponentKind::FlatFat:
      return "flat-fat";
  }
  return "?";
}

std::vector<Fp> Component::point_at(Fp s, Fp u, const FieldSpec& f) const {
  std::vector<Fp> p;
  for (const auto& g : param) p.push_back(evaluate(g, s, u, f));
  return p;
}

int Configuration::curve_count() const {
  return static_cast<int>(std::count_if(components.begin(), components.end(),
                                        [](const Component& c) { return c.is_curve(); }));
}

int Configuration::arithmetic_genus() const {
  return static_cast<int>(nodes.size()) - curve_count() + 1;
}

namespace {

// Scalar c with a = c * b, if the two vectors are proportional and nonzero.
std::optional<Fp> proportion(const std::vector<Fp>& a, const std::vector<Fp>& b, const FieldSpec& f) {
  std::optional<Fp> c;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (b[k] == 0) {
      if (a[k] != 0) return std::nullopt;
      continue;
    }
    const Fp r = f.mul(a[k], f.inv(b[k]));
    if (c && *c != r) return std::nullopt;
    c = r;
  }
  if (!c || *c == 0) return std::nullopt;
  return c;
}

}  // namespace

void validate(Configuration& cfg) {
  const auto& f = cfg.ambient.field;
  const int n = cfg.ambient.n_vars;
  for (std::size_t k = 0; k < cfg.components.size(); ++k) {
    const auto& c = cfg.components[k];
    const std::string where = "component " + std::to_string(k) + ": ";
    if (static_cast<int>(c.param.size()) != n) throw DegenerateConfiguration(where + "wrong number of forms");
    const int d = c.degree();
    if (d < 1) throw DegenerateConfiguration(where + "parametrization of degree < 1");
    for (const auto& g : c.param) {
      if (g.degree() != d) throw DegenerateConfiguration(where + "forms of different degrees");
    }
    if ((c.kind == ComponentKind::Line || c.kind == ComponentKind::RulingLine ||
         c.kind == ComponentKind::FlatFat) && d != 1) {
      throw DegenerateConfiguration(where + "lines must be parametrized linearly");
    }
    if (c.multiplicity < 1) throw DegenerateConfiguration(where + "multiplicity < 1");
    if (have_common_root(c.param, f)) throw DegenerateConfiguration(where + "parametrization has a base point");
  }
  for (auto& node : cfg.nodes) {
    const int m = static_cast<int>(cfg.components.size());
    if (node.i < 0 || node.i >= m || node.j < 0 || node.j >= m || node.i == node.j) {
      throw DegenerateConfiguration("node refers to a missing component");
    }
    const auto a = cfg.components[node.i].point_at(node.pi[0], node.pi[1], f);
    const auto b = cfg.components[node.j].point_at(node.pj[0], node.pj[1], f);
    const auto c = proportion(a, b, f);
    if (!c) throw DegenerateConfiguration("node points do not agree in the ambient space");
    node.scale = *c;
  }
  if (!cfg.nodes.empty()) {
    // Node values must be independent on degree-1 forms.
    std::vector<int> offset(cfg.components.size() + 1, 0);
    for (std::size_t k = 0; k < cfg.components.size(); ++k) {
      offset[k + 1] = offset[k] + cfg.components[k].degree() + 1;
    }
    FieldMatrix nm(f, cfg.nodes.size(), offset.back());
    for (std::size_t r = 0; r < cfg.nodes.size(); ++r) {
      const auto& node = cfg.nodes[r];
      const int di = cfg.components[node.i].degree(), dj = cfg.components[node.j].degree();
      for (int k = 0; k <= di; ++k) {
        nm(r, offset[node.i] + k) = f.mul(f.pow(node.pi[0], di - k), f.pow(node.pi[1], k));
      }
      for (int k = 0; k <= dj; ++k) {
        const Fp v = f.mul(node.scale, f.mul(f.pow(node.pj[0], dj - k), f.pow(node.pj[1], k)));
        nm(r, offset[node.j] + k) = f.sub(nm(r, offset[node.j] + k), v);
      }
    }
    if (rank(nm) != cfg.nodes.size()) {
      throw DegenerateConfiguration("node evaluation matrix is rank deficient");
    }
  }
}

bool lines_are_skew(const Component& a, const Component& b, const FieldSpec& f) {
  FieldMatrix m(f, 4, 4);
  for (int i = 0; i < 4; ++i) {
    m(0, i) = a.param[i].c[0];
    m(1, i) = a.param[i].c[1];
    m(2, i) = b.param[i].c[0];
    m(3, i) = b.param[i].c[1];
  }
  return rank(m) == 4;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<Fp> column(const std::vector<BinaryForm>& param, int k) {
  std::vector<Fp> v;
  for (const auto& g : param) v.push_back(g.c[k]);
  return v;
}

std::vector<Fp> read_point(const nlohmann::json& j, const FieldSpec& f, std::size_t n) {
  if (!j.is_array() || j.size() != n) {
    throw std::invalid_argument("expected a point with " + std::to_string(n) + " coordinates");
  }
  std::vector<Fp> v;
  for (const auto& x : j) v.push_back(f.from_int(x.get<std::int64_t>()));
  return v;
}

std::vector<BinaryForm> line_through(const std::vector<Fp>& a, const std::vector<Fp>& b) {
  std::vector<BinaryForm> param;
  for (std::size_t i = 0; i < a.size(); ++i) param.push_back(BinaryForm::linear(a[i], b[i]));
  return param;
}

}  // namespace

std::uint64_t split_seed(std::uint64_t seed, std::uint64_t k) {
  // splitmix64 step on the combined state.
  std::uint64_t x = seed + 0x9e3779b97f4a7c15ULL * (k + 1);
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

nlohmann::json to_json(const Configuration& cfg) {
  nlohmann::json j;
  j["ambient"] = cfg.ambient.n_vars == 4 ? "P3" : "P" + std::to_string(cfg.ambient.n_vars - 1);
  j["p"] = cfg.ambient.field.p();
  j["seed"] = cfg.seed;
  if (!cfg.recipe.empty()) j["recipe"] = cfg.recipe;
  if (!cfg.params.empty()) j["params"] = cfg.params;
  nlohmann::json comps = nlohmann::json::array();
  for (const auto& c : cfg.components) {
    nlohmann::json e;
    e["kind"] = kind_name(c.kind);
    switch (c.kind) {
      case ComponentKind::Line:
        e["points"] = {column(c.param, 0), column(c.param, 1)};
        break;
      case ComponentKind::RulingLine:
        e["quadric"] = "x0*x3-x1*x2";
        e["param"] = c.ruling_param;
        e["ruling"] = c.ruling;
        break;
      case ComponentKind::FlatFat:
        e["m"] = c.multiplicity;
        e["point"] = column(c.param, 0);
        e["direction"] = column(c.param, 1);
        break;
      case ComponentKind::RationalCurve: {
        e["degree"] = c.degree();
        nlohmann::json forms = nlohmann::json::array();
        for (const auto& g : c.param) forms.push_back(g.c);
        e["forms"] = forms;
        break;
      }
    }
    if (!c.label.empty()) e["label"] = c.label;
    comps.push_back(e);
  }
  j["components"] = comps;
  nlohmann::json nodes = nlohmann::json::array();
  for (const auto& n : cfg.nodes) {
    nodes.push_back({n.i, n.j, {n.pi[0], n.pi[1]}, {n.pj[0], n.pj[1]}});
  }
  j["nodes"] = nodes;
  return j;
}

Component ruling_line(Fp c, int ruling) {
  Component comp;
  comp.kind = ComponentKind::RulingLine;
  comp.ruling_param = c;
  comp.ruling = ruling;
  if (ruling == 0) {
    // (s, c s, u, c u)
    comp.param = {BinaryForm::linear(1, 0), BinaryForm::linear(c, 0), BinaryForm::linear(0, 1),
                  BinaryForm::linear(0, c)};
  } else {
    // (s, u, c s, c u)
    comp.param = {BinaryForm::linear(1, 0), BinaryForm::linear(0, 1), BinaryForm::linear(c, 0),
                  BinaryForm::linear(0, c)};
  }
  return comp;
}

Configuration configuration_from_json(const nlohmann::json& j) {
  Configuration cfg;
  const std::string amb = j.value("ambient", std::string("P3"));
  int n;
  if (amb == "P3") {
    n = 4;
  } else if (amb == "P2") {
    n = 3;
  } else {
    throw std::invalid_argument("ambient must be P2 or P3, got " + amb);
  }
  const FieldSpec f(j.value("p", kDefaultPrime));
  cfg.ambient = RingSpec(n, f);
  cfg.seed = j.value("seed", std::uint64_t{0});
  cfg.recipe = j.value("recipe", std::string());
  if (j.contains("params")) cfg.params = j["params"];
  if (!j.contains("components") || !j["components"].is_array()) {
    throw std::invalid_argument("configuration needs a components array");
  }
  std::size_t index = 0;
  for (const auto& e : j["components"]) {
    const std::string kind = e.at("kind").get<std::string>();
    Component c;
    if (kind == "line") {
      const auto& pts = e.at("points");
      if (!pts.is_array() || pts.size() != 2) throw std::invalid_argument("line needs two points");
      c.kind = ComponentKind::Line;
      c.param = line_through(read_point(pts[0], f, n), read_point(pts[1], f, n));
    } else if (kind == "ruling-line") {
      if (n != 4) throw std::invalid_argument("ruling lines live in P3");
      const std::string q = e.value("quadric", std::string("x0*x3-x1*x2"));
      if (q != "x0*x3-x1*x2") throw Unsupported("only the quadric x0*x3-x1*x2 is supported");
      c = ruling_line(f.from_int(e.at("param").get<std::int64_t>()), e.value("ruling", 0));
    } else if (kind == "flat-fat") {
      c.kind = ComponentKind::FlatFat;
      c.multiplicity = e.at("m").get<int>();
      c.param = line_through(read_point(e.at("point"), f, n), read_point(e.at("direction"), f, n));
    } else if (kind == "rational") {
      c.kind = ComponentKind::RationalCurve;
      if (e.contains("forms")) {
        for (const auto& form : e["forms"]) {
          BinaryForm b;
          for (const auto& x : form) b.c.push_back(f.from_int(x.get<std::int64_t>()));
          c.param.push_back(std::move(b));
        }
      } else {
        std::mt19937_64 rng(split_seed(cfg.seed, index));
        c.param = random_base_point_free_forms(n, e.at("degree").get<int>(), f, rng);
      }
    } else {
      throw std::invalid_argument("unknown component kind '" + kind + "'");
    }
    c.label = e.value("label", std::string());
    cfg.components.push_back(std::move(c));
    ++index;
  }
  if (j.contains("nodes")) {
    for (const auto& e : j["nodes"]) {
      Node node;
      node.i = e.at(0).get<int>();
      node.j = e.at(1).get<int>();
      node.pi = {f.from_int(e.at(2).at(0).get<std::int64_t>()), f.from_int(e.at(2).at(1).get<std::int64_t>())};
      node.pj = {f.from_int(e.at(3).at(0).get<std::int64_t>()), f.from_int(e.at(3).at(1).get<std::int64_t>())};
      cfg.nodes.push_back(node);
    }
  }
  validate(cfg);
  return cfg;
}

}  // namespace raolab
