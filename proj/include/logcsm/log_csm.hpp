#pragma once

// Logarithmic Chern classes and CSM classes for complements of simple
// normal crossing arrangements, computed inside the ambient Chow ring.

#include <cstddef>
#include <string>
#include <vector>

#include "logcsm/chern_calculus.hpp"

namespace logcsm {

struct DivisorComponent {
  std::string name;
  ChowClass divisor;
};

/// Ordered divisor components D_1..D_m on a smooth proper ambient. Whether
/// they really cross normally is the caller's assertion; it is recorded
/// in reports and never checked.
class DivisorArrangement {
 public:
  /// Throws DuplicateLabel, NotADivisorClass or AmbientMismatch.
  DivisorArrangement(Ambient ambient, std::vector<DivisorComponent> components, bool snc_asserted = true);

  const Ambient& ambient() const noexcept { return ambient_; }
  const std::vector<DivisorComponent>& components() const noexcept { return components_; }
  std::size_t size() const noexcept { return components_.size(); }
  const ChowClass& divisor(std::size_t i) const { return components_.at(i).divisor; }
  bool snc_asserted() const noexcept { return snc_asserted_; }

  /// The first `count` components, same ambient.
  DivisorArrangement prefix(std::size_t count) const;

 private:
  Ambient ambient_;
  std::vector<DivisorComponent> components_;
  bool snc_asserted_;
};

/// c(Omega^1(log D)) = c(Omega^1) * prod c(O_{D_i}).
TotalChernClass log_cotangent_chern(const DivisorArrangement& arr);

/// c(Omega^1(log D)^dual), the CSM class of the complement pushed to the ambient.
ChowClass csm_open(const DivisorArrangement& arr);

/// Top-codimension part of csm_open.
ChowClass csm_zero(const DivisorArrangement& arr);

/// c_n(T) + sum_{l=1}^{n} sum_{j_1+..+j_m=l} c_{n-l}(T) c_1(-D_1)^{j_1} ... c_1(-D_m)^{j_m},
/// evaluated term by term.
ChowClass silred_rhs(const DivisorArrangement& arr);

/// [c(T) / prod_i (1 + D_i)] * prod_{i in subset} D_i: the pushed-forward
/// CSM class of the open stratum cut out by `subset`. Throws IndexOutOfRange.
ChowClass stratum_csm_pushed(const DivisorArrangement& arr, const std::vector<std::size_t>& subset);

struct StratumTerm {
  std::vector<std::size_t> subset;
  ChowClass value;
};

struct AdditivityReport {
  std::vector<StratumTerm> strata;
  ChowClass sum;
  ChowClass expected;  // c(T) of the ambient
  bool pass = false;
};

/// Sums stratum_csm_pushed over all 2^m subsets and compares with c(T).
AdditivityReport additivity_check(const DivisorArrangement& arr);

}  // namespace logcsm
