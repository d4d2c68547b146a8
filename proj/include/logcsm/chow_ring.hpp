#pragma once

// Exact graded Chow rings of two ambient families: products of projective
// spaces (Z[h_1..h_k]/(h_i^{n_i+1})) and surfaces presented by a divisor
// lattice with intersection matrix, canonical class and c_2 degree.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "logcsm/error.hpp"

namespace logcsm {

class AmbientSpace;
using Ambient = std::shared_ptr<const AmbientSpace>;

class AmbientSpace {
 public:
  enum class Kind { ProductOfProjectiveSpaces, Surface };

  struct SurfaceData {
    std::vector<std::string> basis_labels;
    std::vector<std::vector<std::int64_t>> intersection_matrix;
    std::vector<std::int64_t> canonical_class;
    std::int64_t c2_degree = 0;

    bool operator==(const SurfaceData&) const = default;
  };

  /// Throws EmptyFactors / NonPositiveDimension.
  static Ambient product(std::vector<int> factors);
  /// Throws InvalidSurfaceData (shape, symmetry) or DuplicateLabel.
  static Ambient surface(SurfaceData data);

  Kind kind() const noexcept { return kind_; }
  bool is_surface() const noexcept { return kind_ == Kind::Surface; }
  int dimension() const noexcept { return dimension_; }

  /// Number of additive basis elements (monomials, or 1 + rank + 1 for surfaces).
  std::size_t basis_size() const noexcept { return codims_.size(); }
  int codimension(std::size_t index) const { return codims_.at(index); }
  std::string monomial_name(std::size_t index) const;
  std::size_t point_index() const noexcept { return basis_size() - 1; }

  // Product case.
  const std::vector<int>& factors() const noexcept { return factors_; }
  const std::vector<int>& exponents(std::size_t index) const { return exponents_.at(index); }
  std::size_t index_of(std::span<const int> exponents) const;

  // Surface case.
  const SurfaceData& surface_data() const noexcept { return surface_; }
  std::size_t lattice_rank() const noexcept { return surface_.basis_labels.size(); }
  std::int64_t pairing(std::size_t i, std::size_t j) const { return surface_.intersection_matrix.at(i).at(j); }

  /// Short description, e.g. "P^2", "P^1 x P^1", "surface[H,E]".
  std::string describe() const;

  bool operator==(const AmbientSpace& other) const {
    return kind_ == other.kind_ && factors_ == other.factors_ && surface_ == other.surface_;
  }

 private:
  AmbientSpace() = default;

  Kind kind_ = Kind::ProductOfProjectiveSpaces;
  int dimension_ = 0;
  std::vector<int> factors_;
  std::vector<std::size_t> strides_;
  std::vector<std::vector<int>> exponents_;
  SurfaceData surface_;
  std::vector<int> codims_;
};

Ambient make_product_ambient(std::vector<int> factors);

/// P^2 and P^1 x P^1 in lattice form; surfaces are returned unchanged.
Ambient as_surface(const Ambient& ambient);

bool same_ambient(const Ambient& a, const Ambient& b);

/// An element of the Chow ring, stored densely in basis order
/// (lexicographic in the exponent vector for products).
class ChowClass {
 public:
  explicit ChowClass(Ambient ambient);
  ChowClass(Ambient ambient, std::vector<std::int64_t> coefficients);

  static ChowClass zero(const Ambient& ambient) { return ChowClass(ambient); }
  static ChowClass one(const Ambient& ambient);
  static ChowClass point(const Ambient& ambient);
  static ChowClass monomial(const Ambient& ambient, std::span<const int> exponents, std::int64_t coefficient = 1);
  /// Sum of d_i times the i-th hyperplane (product) or the i-th lattice vector (surface).
  static ChowClass divisor(const Ambient& ambient, std::span<const std::int64_t> coordinates);

  const Ambient& ambient() const noexcept { return ambient_; }
  std::span<const std::int64_t> coefficients() const noexcept { return coefficients_; }
  std::int64_t coefficient(std::size_t index) const { return coefficients_.at(index); }

  bool is_zero() const noexcept;
  /// Homogeneous component of the given codimension.
  ChowClass part(int codim) const;
  /// Codimension of a nonzero homogeneous class, or -1 for zero / mixed classes.
  int homogeneous_codimension() const;
  /// Divisor coordinates of the codimension-1 part.
  std::vector<std::int64_t> divisor_coordinates() const;

  ChowClass operator-() const;
  ChowClass scaled(std::int64_t factor) const;

  friend ChowClass operator+(const ChowClass& x, const ChowClass& y);
  friend ChowClass operator-(const ChowClass& x, const ChowClass& y);
  friend ChowClass operator*(const ChowClass& x, const ChowClass& y);
  ChowClass& operator+=(const ChowClass& y) { return *this = *this + y; }
  ChowClass& operator*=(const ChowClass& y) { return *this = *this * y; }

  bool operator==(const ChowClass& other) const;

  /// Human-readable form, graded by codimension: "1 + 3h + 3h^2".
  std::string to_string() const;

 private:
  Ambient ambient_;
  std::vector<std::int64_t> coefficients_;
};

ChowClass power(const ChowClass& x, int exponent);

/// Coefficient of the point class.
std::int64_t degree(const ChowClass& x);

struct BlowDownMap {
  Ambient source;
  Ambient target;
  std::string exceptional_label;
};

/// Blows up a point on a surface. Returns the new surface and its blow-down map.
std::pair<Ambient, BlowDownMap> blow_up_surface(const Ambient& target, const std::string& new_label);

/// Checks E^2 = -1, E orthogonal to the old lattice, K' = K + E, c2' = c2 + 1.
bool blowdown_invariants_hold(const BlowDownMap& map);

ChowClass pushforward_blowdown(const BlowDownMap& map, const ChowClass& x);

/// Pushes through a chain source -> ... -> target given in blow-up order
/// (maps.front().target is the bottom, maps.back().source is the top).
ChowClass pushforward_chain(std::span<const BlowDownMap> maps, const ChowClass& x);

}  // namespace logcsm
