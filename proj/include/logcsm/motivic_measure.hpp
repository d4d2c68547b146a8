#pragma once

// Compactly supported Euler characteristics by cut-and-paste, valued in the
// integers or in the subring Z[<-1>] of the Grothendieck-Witt ring.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "logcsm/error.hpp"

namespace logcsm {

/// a<1> + b<-1>, with <-1>^2 = <1>.
struct GWElement {
  std::int64_t a = 0;
  std::int64_t b = 0;

  static GWElement one() { return {1, 0}; }
  static GWElement epsilon() { return {0, 1}; }

  bool operator==(const GWElement&) const = default;
  std::string to_string() const;
};

GWElement gw_add(const GWElement& x, const GWElement& y);
GWElement gw_sub(const GWElement& x, const GWElement& y);
GWElement gw_mul(const GWElement& x, const GWElement& y);
GWElement gw_pow(const GWElement& x, int exponent);

struct GWInvariants {
  std::int64_t rank = 0;
  std::int64_t signature = 0;
  bool operator==(const GWInvariants&) const = default;
};

/// rank = a + b, signature = a - b.
GWInvariants gw_invariants(const GWElement& x);

struct SpaceExpression {
  enum class Kind { Point, Affine, Proj, Gm, Product, DisjointUnion, Complement };

  Kind kind = Kind::Point;
  int n = 0;                               // Affine / Proj
  std::vector<SpaceExpression> children;   // Product, DisjointUnion; Complement = {whole, closed_part}
  std::optional<int> smooth_dim;

  static SpaceExpression point() { return {}; }
  static SpaceExpression affine(int n) { return {Kind::Affine, n, {}, std::nullopt}; }
  static SpaceExpression proj(int n) { return {Kind::Proj, n, {}, std::nullopt}; }
  static SpaceExpression gm() { return {Kind::Gm, 0, {}, std::nullopt}; }
  static SpaceExpression product(std::vector<SpaceExpression> factors) {
    return {Kind::Product, 0, std::move(factors), std::nullopt};
  }
  static SpaceExpression disjoint_union(std::vector<SpaceExpression> parts) {
    return {Kind::DisjointUnion, 0, std::move(parts), std::nullopt};
  }
  static SpaceExpression complement(SpaceExpression whole, SpaceExpression closed_part) {
    return {Kind::Complement, 0, {std::move(whole), std::move(closed_part)}, std::nullopt};
  }
  SpaceExpression with_smooth_dim(int dim) const {
    SpaceExpression e = *this;
    e.smooth_dim = dim;
    return e;
  }

  bool operator==(const SpaceExpression&) const = default;
  std::string to_string() const;
};

/// Throws MalformedExpression describing the first offending node.
void validate(const SpaceExpression& e);

std::int64_t chi_compact(const SpaceExpression& e);
GWElement chi_compact_quadratic(const SpaceExpression& e);
/// <-1>^{smooth_dim} * chi_compact_quadratic(e); throws MissingSmoothDim.
GWElement chi_homological_quadratic(const SpaceExpression& e);

}  // namespace logcsm
