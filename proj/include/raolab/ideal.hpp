#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <vector>

#include "json.hpp"

#include "raolab/poly.hpp"

namespace raolab {

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Cap on S-pair reductions per Groebner computation. Exceeding it raises
/// BudgetExceeded and discards the partial basis.
std::uint64_t default_reduction_budget();
void set_default_reduction_budget(std::uint64_t budget);

/// Homogeneous ideal with a write-once reduced Groebner basis for the ring's
/// own monomial order.
class Ideal {
 public:
  Ideal() = default;
  Ideal(RingSpec ring, std::vector<Polynomial> generators);

  static Ideal unit(const RingSpec& ring);
  static Ideal zero(const RingSpec& ring);
  /// (x0, ..., x{n-1}).
  static Ideal irrelevant(const RingSpec& ring);

  const RingSpec& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }

  /// Reduced Groebner basis, sorted by decreasing leading monomial.
  const std::vector<Polynomial>& groebner_basis() const;
  bool has_cached_basis() const;

  bool contains(const Polynomial& f) const;
  bool contains(const Ideal& other) const;
  bool is_unit() const;
  bool is_zero() const;

 private:
  struct Cache {
    std::once_flag once;
    std::vector<Polynomial> basis;
    bool ready = false;
  };

  RingSpec ring_{};
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

/// Same ideal, reinterpreted under another order, with its basis computed.
Ideal groebner(const Ideal& ideal, MonomialOrder order, int block = 0);

/// Reduced Groebner basis of the generators (Buchberger, sugar strategy,
/// Gebauer-Moeller criteria).
std::vector<Polynomial> buchberger(const std::vector<Polynomial>& generators, const RingSpec& ring,
                                   std::uint64_t budget = default_reduction_budget());

/// Full reduction of f by a Groebner basis (every basis element monic).
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis);

/// True if every S-polynomial of basis pairs reduces to zero.
bool satisfies_buchberger_criterion(const std::vector<Polynomial>& basis);

Ideal operator+(const Ideal& a, const Ideal& b);
Ideal operator*(const Ideal& a, const Ideal& b);
Ideal power(const Ideal& a, int k);
bool operator==(const Ideal& a, const Ideal& b);

struct HilbertPolynomialInfo {
  std::int64_t degree = 0;  // leading coefficient times dim!
  int dim = -1;             // projective dimension of the scheme
};

struct HilbertData {
  std::map<int, std::int64_t> dims_quotient;
  std::map<int, std::int64_t> dims_ideal;
  /// Coefficients of the Hilbert series numerator once all factors (1 - z)
  /// accounted for by the Krull dimension are divided out.
  std::vector<std::int64_t> h_polynomial;
  /// Filled for one-dimensional quotients (zero-dimensional schemes).
  std::vector<std::int64_t> h_vector;
  std::optional<HilbertPolynomialInfo> hilbert_polynomial;
  int krull_dim = 0;
};

/// Hilbert series numerator of R / (monomials), in Z[z], with R having n variables.
std::vector<std::int64_t> hilbert_numerator(const std::vector<Monomial>& generators, int n_vars);

HilbertData hilbert_function(const Ideal& ideal, int t_max);
std::int64_t quotient_dimension(const Ideal& ideal, int t);
nlohmann::json to_json(const HilbertData& data);

Ideal intersect(const Ideal& a, const Ideal& b);
/// Left fold of pairwise intersections.
Ideal intersect(const std::vector<Ideal>& ideals);

/// I : (g).
Ideal quotient(const Ideal& ideal, const Polynomial& g);
/// I : J, intersecting the colons by each generator of J.
Ideal quotient(const Ideal& ideal, const Ideal& other);
/// I : (g) through (I intersect (g)) / g only, never the monomial shortcut.
Ideal quotient_by_intersection(const Ideal& ideal, const Polynomial& g);

struct Saturation {
  Ideal ideal;
  int index = 0;  // number of colon steps that changed the ideal
};
/// Iterated colon I : J : J : ... until the reduced bases stop changing.
Saturation saturate(const Ideal& ideal, const Ideal& other);

/// I intersected with the subring in the kept variables, expressed in a ring
/// whose variables are the kept ones in their original order.
Ideal eliminate(const Ideal& ideal, const std::vector<int>& keep);

/// I + (codim x codim minors of the Jacobian of the generators).
Ideal singular_locus(const Ideal& ideal, int codim);
/// Whether the scheme of I (equidimensional of the stated codimension) is
/// smooth, i.e. the saturated singular locus is the unit ideal.
bool is_smooth(const Ideal& ideal, int codim, std::uint64_t seed = 1);

/// Exact division; throws if g does not divide f.
Polynomial divide_exact(const Polynomial& f, const Polynomial& g);

nlohmann::json to_json(const Ideal& ideal);

}  // namespace raolab
