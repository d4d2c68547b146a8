#include <chrono>
#include <random>

#include "logcsm/scenario.hpp"

namespace logcsm {
namespace {

// MMIX multiplier and increment, modulus 2^64.
using SuiteEngine = std::linear_congruential_engine<std::uint64_t, 6364136223846793005ULL, 1442695040888963407ULL, 0ULL>;

void compositions(int total, std::vector<int>& prefix, std::vector<std::vector<int>>& out) {
  if (total == 0) {
    out.push_back(prefix);
    return;
  }
  for (int first = 1; first <= total; ++first) {
    prefix.push_back(first);
    compositions(total - first, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

void validate_bounds(const SuiteBounds& b) {
  if (b.max_dim < 1 || b.max_dim > 3) throw Error(ErrorCode::InvalidBounds, "max_dim must lie in [1, 3]");
  if (b.max_components < 1 || b.max_components > 4) throw Error(ErrorCode::InvalidBounds, "max_components must lie in [1, 4]");
  if (b.max_multidegree < 1 || b.max_multidegree > 3) throw Error(ErrorCode::InvalidBounds, "max_multidegree must lie in [1, 3]");
  if (b.count < 0 || b.count > 1000000) throw Error(ErrorCode::InvalidBounds, "count must lie in [0, 1000000]");
}

ArrangementGenerator::ArrangementGenerator(const SuiteBounds& bounds) : bounds_(bounds), state_(bounds.seed) {
  validate_bounds(bounds_);
  std::vector<int> prefix;
  for (int d = 1; d <= bounds_.max_dim; ++d) compositions(d, prefix, shapes_);
  for (const auto& shape : shapes_) ambients_.push_back(make_product_ambient(shape));
}

std::uint64_t ArrangementGenerator::draw(std::uint64_t bound) {
  SuiteEngine engine(state_);
  state_ = engine();
  return (state_ >> 33) % bound;
}

DivisorArrangement ArrangementGenerator::next() {
  const std::size_t which = draw(ambients_.size());
  const Ambient& ambient = ambients_[which];
  const std::size_t k = shapes_[which].size();
  const std::size_t m = 1 + draw(static_cast<std::uint64_t>(bounds_.max_components));

  std::vector<DivisorComponent> components;
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<std::int64_t> multidegree(k);
    for (auto& d : multidegree) d = 1 + static_cast<std::int64_t>(draw(static_cast<std::uint64_t>(bounds_.max_multidegree)));
    components.push_back({"D" + std::to_string(i + 1), ChowClass::divisor(ambient, multidegree)});
  }
  return DivisorArrangement(ambient, std::move(components));
}

Report verify_suite(const SuiteBounds& bounds, const RunOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  ArrangementGenerator generator(bounds);

  Report report;
  Json& doc = report.document;
  doc["engine"] = kEngineName;
  doc["version"] = kEngineVersion;
  Json suite;
  suite["seed"] = bounds.seed;
  suite["max_dim"] = bounds.max_dim;
  suite["max_components"] = bounds.max_components;
  suite["max_multidegree"] = bounds.max_multidegree;
  suite["count"] = bounds.count;
  doc["suite"] = std::move(suite);

  int main_ok = 0, induction_ok = 0, additivity_ok = 0;
  Json cases = Json::array();
  for (int index = 0; index < bounds.count; ++index) {
    const DivisorArrangement arr = generator.next();
    const bool main = verify_main_identity(arr).pass;
    const bool induction = verify_silclaim_induction(arr).pass;
    const bool additivity = additivity_check(arr).pass;
    main_ok += main;
    induction_ok += induction;
    additivity_ok += additivity;
    report.pass = report.pass && main && induction && additivity;

    Json c;
    c["index"] = index;
    c["ambient"] = arr.ambient()->describe();
    Json comps = Json::array();
    for (const auto& comp : arr.components()) comps.push_back(comp.name + " = " + comp.divisor.to_string());
    c["components"] = std::move(comps);
    c["verify_main"] = main;
    c["verify_induction"] = induction;
    c["additivity"] = additivity;
    cases.push_back(std::move(c));
  }
  doc["cases"] = std::move(cases);
  Json summary;
  summary["count"] = bounds.count;
  summary["verify_main"] = main_ok;
  summary["verify_induction"] = induction_ok;
  summary["additivity"] = additivity_ok;
  doc["summary"] = std::move(summary);
  doc["pass"] = report.pass;
  if (options.timing) {
    doc["duration_ms"] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }
  return report;
}

}  // namespace logcsm
