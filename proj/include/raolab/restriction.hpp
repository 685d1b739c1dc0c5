#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <vector>

#include "raolab/config.hpp"
#include "raolab/ideal.hpp"
#include "raolab/matrix.hpp"

namespace raolab {

class DegenerateSection : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InternalInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Conditions on forms f of the ambient ring: f restricted through param is
/// divisible by the divisor, or vanishes identically when there is none.
struct Piece {
  std::vector<BinaryForm> param;
  std::optional<BinaryForm> divisor;
};

struct Scheme {
  RingSpec ambient{};
  std::vector<Piece> pieces;

  /// Length of the zero-dimensional scheme; nullopt when a piece is a curve.
  std::optional<std::int64_t> degree() const;
};

/// Rows: coefficients of f restricted through param (degree D*t); columns:
/// monomial_basis(ambient, t).
FieldMatrix restriction_matrix(const std::vector<BinaryForm>& param, const RingSpec& ambient, int t);
/// Matrix of g * (.) from forms of degree n to forms of degree n + deg g.
FieldMatrix multiplication_matrix(const BinaryForm& g, int n, const FieldSpec& f);

FieldMatrix condition_matrix(const Piece& piece, const RingSpec& ambient, int t);
FieldMatrix condition_matrix(const Scheme& scheme, int t);

/// dim [I]_t for the ideal cut out by the scheme's conditions.
std::int64_t ideal_dimension(const Scheme& scheme, int t);
/// Basis of [I]_t as explicit forms.
std::vector<Polynomial> ideal_basis(const Scheme& scheme, int t);
/// dim [R/I]_t.
std::int64_t hilbert_value(const Scheme& scheme, int t);
/// First differences of the Hilbert function of a zero-dimensional scheme,
/// computed until it reaches the scheme's degree.
std::vector<std::int64_t> h_vector(const Scheme& scheme);

Scheme scheme_of(const Configuration& cfg);
std::int64_t ideal_dimension(const Configuration& cfg, int t);

/// Z_m = C intersected with the m-fold plane L^m = 0, one piece per curve.
Scheme section_scheme(const Configuration& cfg, const std::vector<Fp>& L, int m);
/// Z_1 viewed in the plane L = 0, in a 3-variable ring with coordinates
/// given by a fixed basis of ker L.
Scheme plane_section_scheme(const Configuration& cfg, const std::vector<Fp>& L);

/// Plane coordinates for L = 0: basis (4x3, columns) of ker L and a 3x4
/// left inverse.
struct PlaneChart {
  FieldMatrix basis;
  FieldMatrix projection;
};
PlaneChart plane_chart(const std::vector<Fp>& L, const FieldSpec& f);

std::int64_t section_scheme_dimension(const Configuration& cfg, const std::vector<Fp>& L, int m, int t);

/// Dimension of node-compatible tuples of degree d_i*t forms on the curves.
std::int64_t h0_structure_sheaf(const Configuration& cfg, int t);

/// Degree-wise presentation M_t = V_t / W_t: V_t the node-compatible tuples
/// of forms on the curve components, W_t the image of the degree-t forms.
class Presentation {
 public:
  struct Degree {
    int t = 0;
    std::vector<std::size_t> offset;  // block offsets of the ambient tuple space
    FieldMatrix v_basis;              // columns span V_t
    FieldMatrix w;                    // columns: restrictions of monomials
    std::size_t rank_w = 0;
    std::int64_t dim_v = 0;
    std::int64_t dim_m = 0;
  };

  explicit Presentation(Configuration cfg);

  const Configuration& config() const { return cfg_; }
  /// Computed once per degree; safe to call concurrently.
  const Degree& at(int t) const;

  /// Rank of x L^m : M_{t-m} -> M_t on the presentation.
  std::int64_t multiplication_rank(const std::vector<Fp>& L, int m, int t) const;
  /// dim of { v in M_t : x_i v = 0 in M_{t+1} for every i }.
  std::int64_t socle_dimension(int t) const;

 private:
  FieldMatrix block_multiply(const std::vector<BinaryForm>& factors, int t_from) const;

  Configuration cfg_;
  std::vector<int> curves_;  // indices of curve components
  mutable std::mutex mutex_;
  mutable std::map<int, std::unique_ptr<Degree>> cache_;
};

struct RaoProfile {
  std::map<int, std::int64_t> dims;  // every computed degree 0..horizon
  std::map<int, std::int64_t> socle;
  int horizon = 0;
  std::shared_ptr<const Presentation> presentation;

  std::int64_t dim(int t) const;
  /// First and last degree of nonzero dimension; nullopt for M = 0.
  std::optional<std::pair<int, int>> support() const;
  std::int64_t total_length() const;
};

/// Dims by the formula route h0 - dim R_t + dim I_t, checked against V/W.
RaoProfile rao_profile(const Configuration& cfg, int min_horizon = 6);

void fill_socle(RaoProfile& profile);

struct MultiplicationRank {
  std::int64_t rank = 0;
  std::int64_t kernel_formula = 0;  // from section and curve ideal dimensions
};

/// Rank of x L^m : M_{t-m} -> M_t by both routes; throws
/// InternalInconsistency when they disagree.
MultiplicationRank multiplication_rank(const RaoProfile& profile, const std::vector<Fp>& L, int m, int t);

}  // namespace raolab
