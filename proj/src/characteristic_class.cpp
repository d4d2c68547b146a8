#include "logcsm/characteristic_class.hpp"

namespace logcsm {
namespace {

// Pushforward of C(1) of the union of the components `union_of`, viewed
// inside the smooth stratum cut out by `base`.
ChowClass pushed_union_in_stratum(const DivisorArrangement& arr, const std::vector<std::size_t>& base,
                                  const std::vector<std::size_t>& union_of) {
  const Ambient& a = arr.ambient();
  const int n = a->dimension();
  const TotalChernClass tangent = tangent_chern(a);
  const std::size_t k = union_of.size();
  if (k >= 63) throw Error(ErrorCode::IndexOutOfRange, "too many components for inclusion-exclusion");

  ChowClass total = ChowClass::zero(a);
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
    std::vector<std::size_t> stratum = base;
    for (std::size_t i = 0; i < k; ++i) {
      if (mask & (std::uint64_t{1} << i)) stratum.push_back(union_of[i]);
    }
    const int codim = static_cast<int>(stratum.size());
    if (codim > n) continue;

    // Adjunction: c(T_{D_I}) = c(T) / prod_{i in I} (1 + D_i); its top class
    // pushed forward is prod D_i times the codimension-(n - |I|) part.
    TotalChernClass normal = TotalChernClass::one(a);
    ChowClass fundamental = ChowClass::one(a);
    for (std::size_t i : stratum) {
      normal = normal * line_bundle_chern(arr.divisor(i));
      fundamental = fundamental * arr.divisor(i);
    }
    ChowClass euler = fundamental * whitney_quotient(tangent, normal).chern(n - codim);
    const int sign_count = codim - static_cast<int>(base.size());
    total = sign_count % 2 == 1 ? total + euler : total - euler;
  }
  return total;
}

std::vector<std::size_t> first_indices(std::size_t count) {
  std::vector<std::size_t> out(count);
  for (std::size_t i = 0; i < count; ++i) out[i] = i;
  return out;
}

// Chern classes c_0..c_d of the tangent bundle of a smooth stratum Y, as
// ambient-ring representatives.
using ChernList = std::vector<ChowClass>;

// Restriction rule c_e(T_Y)|_D = c_e(T_D) - c_{e-1}(T_D) c_1(-D), solved for c_e(T_D).
ChernList restrict_to_divisor(const ChernList& tangent, const ChowClass& divisor) {
  const std::size_t d = tangent.size() - 1;
  ChernList out;
  out.reserve(d);
  out.push_back(ChowClass::one(divisor.ambient()));
  for (std::size_t e = 1; e < d; ++e) out.push_back(tangent[e] - out[e - 1] * divisor);
  return out;
}

// sum_{l=1}^{d} sum_{j_1+..+j_r=l} c_{d-l}(T_Y) (-D_1)^{j_1} ... (-D_r)^{j_r}
// by distributing l over the components one at a time.
ChowClass literal_claim_sum(const ChernList& tangent, const std::vector<ChowClass>& divisors) {
  const int d = static_cast<int>(tangent.size()) - 1;
  const Ambient& a = tangent.front().ambient();

  // partial[l] = sum of monomials of total degree l in the first i divisors.
  std::vector<ChowClass> partial(static_cast<std::size_t>(d) + 1, ChowClass::zero(a));
  partial[0] = ChowClass::one(a);
  for (const auto& divisor : divisors) {
    const ChowClass minus = -divisor;
    std::vector<ChowClass> next(partial.size(), ChowClass::zero(a));
    for (int l = 0; l <= d; ++l) {
      ChowClass p = ChowClass::one(a);
      for (int j = 0; j + l <= d; ++j) {
        next[static_cast<std::size_t>(l + j)] += partial[static_cast<std::size_t>(l)] * p;
        p = p * minus;
      }
    }
    partial = std::move(next);
  }

  ChowClass total = ChowClass::zero(a);
  for (int l = 1; l <= d; ++l) total += tangent[static_cast<std::size_t>(d - l)] * partial[static_cast<std::size_t>(l)];
  return total;
}

// The same sum rebuilt by the induction: split on whether the last index is
// zero, recurse on the first r-1 divisors, and treat the j_last >= 1 part on
// the last divisor using the restriction rule and the projection formula.
ChowClass recursive_claim_sum(const ChernList& tangent, const std::vector<ChowClass>& divisors) {
  const Ambient& a = tangent.front().ambient();
  if (divisors.empty() || tangent.size() < 2) return ChowClass::zero(a);

  const ChowClass& last = divisors.back();
  const std::vector<ChowClass> rest(divisors.begin(), divisors.end() - 1);
  const ChernList on_last = restrict_to_divisor(tangent, last);

  ChowClass first_term = recursive_claim_sum(tangent, rest);
  ChowClass inner = on_last.back() + recursive_claim_sum(on_last, rest);
  return first_term - last * inner;
}

}  // namespace

ChowClass boundary_class_pushed(const DivisorArrangement& arr, const std::vector<std::size_t>& union_of) {
  for (std::size_t i : union_of) {
    if (i >= arr.size()) throw Error(ErrorCode::IndexOutOfRange, "component index " + std::to_string(i));
  }
  return pushed_union_in_stratum(arr, {}, union_of);
}

ChowClass char_class_localization(const DivisorArrangement& arr) {
  const Ambient& a = arr.ambient();
  return tangent_chern(a).chern(a->dimension()) - boundary_class_pushed(arr, first_indices(arr.size()));
}

MainIdentityReport verify_main_identity(const DivisorArrangement& arr) {
  MainIdentityReport r{csm_zero(arr), silred_rhs(arr), char_class_localization(arr), false};
  r.pass = r.csm_zero == r.silred_rhs && r.silred_rhs == r.char_class;
  return r;
}

InductionReport verify_silclaim_induction(const DivisorArrangement& arr) {
  if (arr.size() == 0) throw Error(ErrorCode::IndexOutOfRange, "the induction needs at least one component");
  const Ambient& a = arr.ambient();
  const int n = a->dimension();
  const TotalChernClass tangent = tangent_chern(a);

  ChernList chern;
  for (int s = 0; s <= n; ++s) chern.push_back(tangent.chern(s));

  InductionReport report;
  report.pass = true;
  std::vector<ChowClass> divisors;
  for (std::size_t level = 1; level <= arr.size(); ++level) {
    divisors.push_back(arr.divisor(level - 1));
    const DivisorArrangement prefix = arr.prefix(level);

    InductionLevel row{level,
                       literal_claim_sum(chern, divisors),
                       recursive_claim_sum(chern, divisors),
                       csm_zero(prefix) - tangent.chern(n),
                       -boundary_class_pushed(arr, first_indices(level)),
                       std::nullopt,
                       std::nullopt,
                       false};
    row.pass = row.literal_sum == row.recursive && row.recursive == row.closed_form &&
               row.closed_form == row.localization;
    if (level >= 2) {
      const std::vector<std::size_t> earlier = first_indices(level - 1);
      row.mayer_vietoris_lhs =
          boundary_class_pushed(arr, {level - 1}) - pushed_union_in_stratum(arr, {level - 1}, earlier);
      row.mayer_vietoris_rhs = boundary_class_pushed(arr, first_indices(level)) - boundary_class_pushed(arr, earlier);
      row.pass = row.pass && *row.mayer_vietoris_lhs == *row.mayer_vietoris_rhs;
    }
    report.pass = report.pass && row.pass;
    report.levels.push_back(std::move(row));
  }
  return report;
}

CompatReport compactification_compat(const CompactificationDiagram& diag) {
  const Ambient& up = diag.upstairs.ambient();
  const Ambient& down = diag.downstairs.ambient();
  if (diag.maps.empty()) {
    if (!same_ambient(up, down)) throw Error(ErrorCode::AmbientMismatch, "empty blow-down chain between different ambients");
  } else {
    if (!same_ambient(diag.maps.back().source, up) || !same_ambient(diag.maps.front().target, down)) {
      throw Error(ErrorCode::AmbientMismatch, "blow-down chain does not connect the diagram's ambients");
    }
    for (std::size_t i = 1; i < diag.maps.size(); ++i) {
      if (!same_ambient(diag.maps[i].target, diag.maps[i - 1].source)) {
        throw Error(ErrorCode::AmbientMismatch, "blow-down chain is not composable");
      }
    }
  }

  CompatReport r{csm_open(diag.upstairs),
                 ChowClass::zero(down),
                 csm_open(diag.downstairs),
                 char_class_localization(diag.upstairs),
                 ChowClass::zero(down),
                 char_class_localization(diag.downstairs)};
  r.pushed_csm_open = pushforward_chain(diag.maps, r.upstairs_csm_open);
  r.pushed_char_class = pushforward_chain(diag.maps, r.upstairs_char_class);
  r.csm_agree = r.pushed_csm_open == r.downstairs_csm_open;
  r.char_agree = r.pushed_char_class == r.downstairs_char_class;
  r.pass = r.csm_agree && r.char_agree;
  return r;
}

}  // namespace logcsm
