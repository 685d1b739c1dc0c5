#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "raolab/field.hpp"
#include "raolab/poly.hpp"

namespace raolab {

class DegenerateConfiguration : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Unsupported : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Binary form of degree size()-1: c[k] is the coefficient of s^(D-k) u^k.
struct BinaryForm {
  std::vector<Fp> c;

  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const;
  static BinaryForm zero(int degree) { return {std::vector<Fp>(degree + 1, 0)}; }
  static BinaryForm linear(Fp a, Fp b) { return {{a, b}}; }
  /// u^k as a form of degree k.
  static BinaryForm u_power(int k);

  friend bool operator==(const BinaryForm&, const BinaryForm&) = default;
};

BinaryForm multiply(const BinaryForm& a, const BinaryForm& b, const FieldSpec& f);
BinaryForm power(const BinaryForm& a, int e, const FieldSpec& f);
BinaryForm add(const BinaryForm& a, const BinaryForm& b, const FieldSpec& f);
BinaryForm scale(const BinaryForm& a, Fp c, const FieldSpec& f);
Fp evaluate(const BinaryForm& a, Fp s, Fp u, const FieldSpec& f);
/// True if the forms share a root on the projective line.
bool have_common_root(const std::vector<BinaryForm>& forms, const FieldSpec& f);

/// n random forms of degree d without a common root on the line.
std::vector<BinaryForm> random_base_point_free_forms(int n, int d, const FieldSpec& f,
                                                     std::mt19937_64& rng);

/// A linear form sum_i l[i] x_i pulled back through a parametrization.
BinaryForm pull_back_linear(const std::vector<Fp>& l, const std::vector<BinaryForm>& param,
                            const FieldSpec& f);

enum class ComponentKind { Line, RulingLine, RationalCurve, FlatFat };

std::string kind_name(ComponentKind k);

/// One component of a configuration. Curves impose "f restricted through
/// param vanishes"; a flat fat point imposes "f restricted through param is
/// divisible by u^m", with its support at the parameter (1, 0).
struct Component {
  ComponentKind kind = ComponentKind::Line;
  std::vector<BinaryForm> param;  // one form per ambient variable
  int multiplicity = 1;           // flat fat points only
  Fp ruling_param = 0;            // ruling lines: which line of the ruling
  int ruling = 0;                 // ruling lines: 0 or 1
  std::string label;

  int degree() const { return param.empty() ? 0 : param.front().degree(); }
  bool is_curve() const { return kind != ComponentKind::FlatFat; }
  std::vector<Fp> point_at(Fp s, Fp u, const FieldSpec& f) const;
};

/// Glued points: param_i(pi) = scale * param_j(pj).
struct Node {
  int i = 0, j = 0;
  std::array<Fp, 2> pi{}, pj{};
  Fp scale = 1;
};

struct Configuration {
  RingSpec ambient{};
  std::vector<Component> components;
  std::vector<Node> nodes;
  std::uint64_t seed = 0;
  std::string recipe;
  nlohmann::json params = nlohmann::json::object();

  int curve_count() const;
  /// Arithmetic genus from component/node combinatorics: sum of component
  /// genera (0 for rational) + nodes - components + 1.
  int arithmetic_genus() const;
};

/// Checks forms, degrees, base points, node agreement (filling Node::scale)
/// and rank of the node evaluation matrix; throws DegenerateConfiguration.
void validate(Configuration& cfg);

/// Whether two linearly parametrized lines are disjoint (their four spanning
/// points are independent).
bool lines_are_skew(const Component& a, const Component& b, const FieldSpec& f);

/// Line of the quadric x0*x3 - x1*x2: ruling 0 is (s, c s, u, c u), ruling 1
/// is (s, u, c s, c u).
Component ruling_line(Fp c, int ruling);

/// Independent seed for stream k derived from a base seed.
std::uint64_t split_seed(std::uint64_t seed, std::uint64_t k);

nlohmann::json to_json(const Configuration& cfg);
Configuration configuration_from_json(const nlohmann::json& j);

}  // namespace raolab
