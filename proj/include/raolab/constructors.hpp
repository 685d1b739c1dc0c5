#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "raolab/config.hpp"
#include "raolab/ideal.hpp"
#include "raolab/restriction.hpp"

namespace raolab {

Fp random_element(const FieldSpec& f, std::mt19937_64& rng);
std::vector<Fp> random_vector(const FieldSpec& f, std::size_t n, std::mt19937_64& rng);
/// Coefficients of a random linear form in n variables (never zero).
std::vector<Fp> random_linear_form(const FieldSpec& f, int n, std::mt19937_64& rng);

/// Line s*a + u*b.
Component line_component(const std::vector<Fp>& a, const std::vector<Fp>& b);

Configuration general_skew_lines(int r, std::uint64_t seed, FieldSpec f = {});
Configuration quadric_ruling_lines(int r, std::uint64_t seed, FieldSpec f = {}, int ruling = 0);
Configuration quadric_plus_general(int r_on_quadric, int n_general, std::uint64_t seed, FieldSpec f = {});
/// s flat fat points of multiplicity m in the plane at random points with
/// random directions.
Configuration flat_fat_points_plane(int s, int m, std::uint64_t seed, FieldSpec f = {});
Configuration rational_curve(int d, std::uint64_t seed, FieldSpec f = {});
/// Curve of bidegree (a, b) on x0*x3 - x1*x2; only a = 1 is supported.
Configuration bidegree_curve_on_quadric(int a, int b, std::uint64_t seed, FieldSpec f = {});
/// Adds a line through a random point of the given component and a random
/// external point, glued by one node.
Configuration incident_line(const Configuration& cfg, int component, std::uint64_t seed);
/// The (1,7) curve on the quadric plus two lines each meeting it once.
Configuration arithmetic_genus_zero(std::uint64_t seed, FieldSpec f = {});

/// Builds a configuration from a recipe tag and its parameters:
/// general-skew-lines {r}, quadric-ruling-lines {r, ruling}, quadric-plus-general
/// {r, n}, flat-fat-points {s, m}, rational-curve {d}, bidegree-on-quadric {a, b},
/// arith-genus-0 {}. Unknown tags throw std::invalid_argument.
Configuration from_recipe(const std::string& recipe, const nlohmann::json& params, std::uint64_t seed,
                          FieldSpec f = {});
std::vector<std::string> recipe_names();

/// Ideal-engine ideal of a component: linear forms for lines, elimination
/// for higher-degree curves, (I_line, l^m) for flat fat points.
Ideal component_ideal(const Component& c, const RingSpec& ambient, std::uint64_t seed = 1);
/// Saturated ideal of the whole configuration via intersections.
Ideal configuration_ideal(const Configuration& cfg);

/// Moving k components of a line configuration into the plane L = 0: each
/// moved line is replaced by a line of the plane through its old meeting
/// point with the plane, carrying a flat fat point of multiplicity m.
struct Specialization {
  Scheme x1;  // in the plane: simple points and moved flat fat points
  Scheme x2;  // in P3: the unmoved components thickened m-1 times
  Scheme x3;  // in P3: unmoved m-thickened components and moved flat fat points
};
Specialization specialize_into_plane(const Configuration& lines, const std::vector<Fp>& L, int m, int k,
                                     std::uint64_t seed);

struct LiaisonChain {
  Ideal c3;
  std::int64_t degree_c1 = 0;    // triple line
  std::int64_t degree_c2 = 0;    // residual to the triple line in (F, G)
  std::int64_t degree_c3 = 0;    // after removing the double line
  std::int64_t quintics = 0;     // dim [I_{C3}]_5
  bool smooth = false;
};
/// Triple line I^3 of (x0, x1), two random quintics F, G in it, residual
/// C2 = (F, G) : I^3, then C3 = C2 : I^2.
LiaisonChain liaison_pipeline(std::uint64_t seed, FieldSpec f = {});

}  // namespace raolab
