#pragma once

#include "logcsm/chow_ring.hpp"

namespace logcsm {

/// A class with degree-0 part equal to 1. Such series are units in the
/// truncated Chow ring, so Whitney quotients always exist.
class TotalChernClass {
 public:
  /// Throws NotAUnitSeries unless the fundamental-class coefficient is 1.
  explicit TotalChernClass(ChowClass value);

  static TotalChernClass one(const Ambient& ambient) { return TotalChernClass(ChowClass::one(ambient)); }

  const ChowClass& value() const noexcept { return value_; }
  const Ambient& ambient() const noexcept { return value_.ambient(); }
  /// c_s as a homogeneous class.
  ChowClass chern(int s) const { return value_.part(s); }

  friend TotalChernClass operator*(const TotalChernClass& a, const TotalChernClass& b) {
    return TotalChernClass(a.value_ * b.value_);
  }
  bool operator==(const TotalChernClass&) const = default;

  std::string to_string() const { return value_.to_string(); }

 private:
  ChowClass value_;
};

/// Product case: prod (1 + h_i)^{n_i + 1}; surface case: 1 - K + c2 pt.
TotalChernClass tangent_chern(const Ambient& ambient);

/// Multiplies the codimension-s part by (-1)^s.
TotalChernClass dual_chern(const TotalChernClass& c);

/// sum_{j >= 0} D^j, the inverse of 1 - D. Throws NotADivisorClass.
TotalChernClass structure_sheaf_chern(const ChowClass& divisor);

/// The unique unit series q with q * den == num.
TotalChernClass whitney_quotient(const TotalChernClass& num, const TotalChernClass& den);

/// 1 + D for a divisor class D.
TotalChernClass line_bundle_chern(const ChowClass& divisor);

}  // namespace logcsm
