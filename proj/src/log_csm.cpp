#include "logcsm/log_csm.hpp"

#include <set>

namespace logcsm {

DivisorArrangement::DivisorArrangement(Ambient ambient, std::vector<DivisorComponent> components, bool snc_asserted)
    : ambient_(std::move(ambient)), components_(std::move(components)), snc_asserted_(snc_asserted) {
  std::set<std::string> names;
  for (const auto& c : components_) {
    if (!names.insert(c.name).second) throw Error(ErrorCode::DuplicateLabel, "component name '" + c.name + "'");
    if (!same_ambient(c.divisor.ambient(), ambient_)) {
      throw Error(ErrorCode::AmbientMismatch, "component '" + c.name + "' lives on another ambient");
    }
    if (c.divisor.homogeneous_codimension() != 1) {
      throw Error(ErrorCode::NotADivisorClass, "component '" + c.name + "' = " + c.divisor.to_string());
    }
  }
}

DivisorArrangement DivisorArrangement::prefix(std::size_t count) const {
  if (count > components_.size()) throw Error(ErrorCode::IndexOutOfRange, "prefix longer than the arrangement");
  return DivisorArrangement(ambient_, {components_.begin(), components_.begin() + static_cast<std::ptrdiff_t>(count)},
                            snc_asserted_);
}

TotalChernClass log_cotangent_chern(const DivisorArrangement& arr) {
  TotalChernClass c = dual_chern(tangent_chern(arr.ambient()));
  for (const auto& comp : arr.components()) c = c * structure_sheaf_chern(comp.divisor);
  return c;
}

ChowClass csm_open(const DivisorArrangement& arr) { return dual_chern(log_cotangent_chern(arr)).value(); }

ChowClass csm_zero(const DivisorArrangement& arr) { return csm_open(arr).part(arr.ambient()->dimension()); }

ChowClass silred_rhs(const DivisorArrangement& arr) {
  const Ambient& a = arr.ambient();
  const int n = a->dimension();
  const std::size_t m = arr.size();
  const TotalChernClass tangent = tangent_chern(a);

  std::vector<ChowClass> minus_d;
  minus_d.reserve(m);
  for (const auto& comp : arr.components()) minus_d.push_back(-comp.divisor);

  ChowClass total = tangent.chern(n);
  if (m == 0) return total;

  // Odometer over exponent vectors (j_1..j_m) with 1 <= j_1+..+j_m <= n.
  std::vector<int> j(m, 0);
  while (true) {
    std::size_t pos = 0;
    while (pos < m) {
      ++j[pos];
      int l = 0;
      for (int v : j) l += v;
      if (l <= n) break;
      j[pos] = 0;
      ++pos;
    }
    if (pos == m) break;

    int l = 0;
    ChowClass term = ChowClass::one(a);
    for (std::size_t i = 0; i < m; ++i) {
      l += j[i];
      term = term * power(minus_d[i], j[i]);
    }
    total = total + tangent.chern(n - l) * term;
  }
  return total;
}

ChowClass stratum_csm_pushed(const DivisorArrangement& arr, const std::vector<std::size_t>& subset) {
  const Ambient& a = arr.ambient();
  TotalChernClass den = TotalChernClass::one(a);
  for (const auto& comp : arr.components()) den = den * line_bundle_chern(comp.divisor);
  ChowClass out = whitney_quotient(tangent_chern(a), den).value();
  std::set<std::size_t> seen;
  for (std::size_t i : subset) {
    if (i >= arr.size()) {
      throw Error(ErrorCode::IndexOutOfRange, "component index " + std::to_string(i) + " of " + std::to_string(arr.size()));
    }
    if (!seen.insert(i).second) throw Error(ErrorCode::IndexOutOfRange, "repeated component index " + std::to_string(i));
    out = out * arr.divisor(i);
  }
  return out;
}

AdditivityReport additivity_check(const DivisorArrangement& arr) {
  const Ambient& a = arr.ambient();
  const std::size_t m = arr.size();
  if (m >= 63) throw Error(ErrorCode::IndexOutOfRange, "too many components for subset enumeration");

  AdditivityReport report{{}, ChowClass::zero(a), tangent_chern(a).value(), false};
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    std::vector<std::size_t> subset;
    for (std::size_t i = 0; i < m; ++i) {
      if (mask & (std::uint64_t{1} << i)) subset.push_back(i);
    }
    ChowClass value = stratum_csm_pushed(arr, subset);
    report.sum = report.sum + value;
    report.strata.push_back({std::move(subset), std::move(value)});
  }
  report.pass = report.sum == report.expected;
  return report;
}

}  // namespace logcsm
