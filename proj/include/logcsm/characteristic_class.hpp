#pragma once

// The compactly supported characteristic class of an open complement,
// computed by localization (c_n(T) minus the class of the boundary, with
// the boundary handled by inclusion-exclusion over strata), together with
// an independent step-by-step replay of the induction on the number of
// boundary components and pushforward checks across blow-downs.

#include <optional>
#include <string>
#include <vector>

#include "logcsm/log_csm.hpp"

namespace logcsm {

/// C(j_! 1_U) at this compactification:
/// c_n(T) - sum_{I nonempty} (-1)^{|I|+1} prod_{i in I} D_i * c_{n-|I|}(T_{D_I}).
ChowClass char_class_localization(const DivisorArrangement& arr);

/// Pushforward to the ambient of C(1_{D_K}) for the union of the components
/// listed in `union_of`, by inclusion-exclusion over the smooth strata.
ChowClass boundary_class_pushed(const DivisorArrangement& arr, const std::vector<std::size_t>& union_of);

struct MainIdentityReport {
  ChowClass csm_zero;
  ChowClass silred_rhs;
  ChowClass char_class;
  bool pass = false;
};

MainIdentityReport verify_main_identity(const DivisorArrangement& arr);

/// One level m' of the induction: every value is a 0-cycle on the ambient.
struct InductionLevel {
  std::size_t level = 0;
  ChowClass literal_sum;    // right side of the reduced claim, term by term
  ChowClass recursive;      // the same sum rebuilt by splitting on the last index
  ChowClass closed_form;    // csm_zero - c_n(T) from the log-Chern path
  ChowClass localization;   // -(pushforward of C(1_D)) by inclusion-exclusion
  // Mayer-Vietoris step (level >= 2):
  //   C(D_m) - C(E_m cap D_m) = C(D) - C(E_m), all pushed to the ambient.
  std::optional<ChowClass> mayer_vietoris_lhs;
  std::optional<ChowClass> mayer_vietoris_rhs;
  bool pass = false;
};

struct InductionReport {
  std::vector<InductionLevel> levels;
  bool pass = false;
};

/// Throws IndexOutOfRange when the arrangement is empty.
InductionReport verify_silclaim_induction(const DivisorArrangement& arr);

/// Two compactifications of the same open set related by a chain of blow-downs.
/// `maps` runs from the bottom (maps.front().target == downstairs ambient)
/// to the top (maps.back().source == upstairs ambient); it may be empty.
struct CompactificationDiagram {
  DivisorArrangement upstairs;
  DivisorArrangement downstairs;
  std::vector<BlowDownMap> maps;
  std::string claim;
};

struct CompatReport {
  ChowClass upstairs_csm_open;
  ChowClass pushed_csm_open;
  ChowClass downstairs_csm_open;
  ChowClass upstairs_char_class;
  ChowClass pushed_char_class;
  ChowClass downstairs_char_class;
  bool csm_agree = false;
  bool char_agree = false;
  bool pass = false;
};

/// Throws AmbientMismatch when the map chain does not connect the two ambients.
CompatReport compactification_compat(const CompactificationDiagram& diag);

}  // namespace logcsm
