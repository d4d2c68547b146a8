#include "logcsm/chern_calculus.hpp"

namespace logcsm {

TotalChernClass::TotalChernClass(ChowClass value) : value_(std::move(value)) {
  if (value_.coefficient(0) != 1) {
    throw Error(ErrorCode::NotAUnitSeries, "degree-0 part of " + value_.to_string() + " is not 1");
  }
}

TotalChernClass tangent_chern(const Ambient& ambient) {
  if (ambient->is_surface()) {
    const auto& s = ambient->surface_data();
    std::vector<std::int64_t> minus_k(s.canonical_class.size());
    for (std::size_t i = 0; i < minus_k.size(); ++i) minus_k[i] = checked::neg(s.canonical_class[i]);
    return TotalChernClass(ChowClass::one(ambient) + ChowClass::divisor(ambient, minus_k) +
                           ChowClass::point(ambient).scaled(s.c2_degree));
  }
  const std::size_t k = ambient->factors().size();
  ChowClass total = ChowClass::one(ambient);
  std::vector<int> e(k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    e[i] = 1;
    const ChowClass factor = ChowClass::one(ambient) + ChowClass::monomial(ambient, e);
    e[i] = 0;
    total = total * power(factor, ambient->factors()[i] + 1);
  }
  return TotalChernClass(std::move(total));
}

TotalChernClass dual_chern(const TotalChernClass& c) {
  const ChowClass& v = c.value();
  std::vector<std::int64_t> out(v.coefficients().begin(), v.coefficients().end());
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (v.ambient()->codimension(i) % 2 == 1) out[i] = checked::neg(out[i]);
  }
  return TotalChernClass(ChowClass(v.ambient(), std::move(out)));
}

TotalChernClass structure_sheaf_chern(const ChowClass& divisor) {
  if (divisor.homogeneous_codimension() != 1) {
    throw Error(ErrorCode::NotADivisorClass, divisor.to_string() + " is not a nonzero codimension-1 class");
  }
  const Ambient& a = divisor.ambient();
  ChowClass sum = ChowClass::one(a);
  ChowClass term = ChowClass::one(a);
  for (int j = 1; j <= a->dimension(); ++j) {
    term = term * divisor;
    sum = sum + term;
  }
  return TotalChernClass(std::move(sum));
}

TotalChernClass line_bundle_chern(const ChowClass& divisor) {
  if (divisor.homogeneous_codimension() != 1 && !divisor.is_zero()) {
    throw Error(ErrorCode::NotADivisorClass, divisor.to_string() + " is not a codimension-1 class");
  }
  return TotalChernClass(ChowClass::one(divisor.ambient()) + divisor);
}

TotalChernClass whitney_quotient(const TotalChernClass& num, const TotalChernClass& den) {
  if (!same_ambient(num.ambient(), den.ambient())) {
    throw Error(ErrorCode::AmbientMismatch, "Whitney quotient across different ambients");
  }
  // Back-substitution: q_k = num_k - sum_{i<k} (q_i * den_{k-i})_k.
  const Ambient& a = num.ambient();
  ChowClass q = ChowClass::one(a);
  for (int k = 1; k <= a->dimension(); ++k) {
    ChowClass qk = num.chern(k);
    for (int i = 0; i < k; ++i) {
      qk = qk - (q.part(i) * den.chern(k - i)).part(k);
    }
    q = q + qk;
  }
  return TotalChernClass(std::move(q));
}

}  // namespace logcsm
