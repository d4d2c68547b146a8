#include <doctest.h>

#include "logcsm/log_csm.hpp"
#include "oracle.hpp"

using namespace logcsm;

namespace {

DivisorArrangement product_arrangement(std::vector<int> factors, std::vector<std::vector<std::int64_t>> degrees) {
  const Ambient a = make_product_ambient(std::move(factors));
  std::vector<DivisorComponent> comps;
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    comps.push_back({"D" + std::to_string(i + 1), ChowClass::divisor(a, degrees[i])});
  }
  return DivisorArrangement(a, std::move(comps));
}

// Naive expansion of c(T) * prod 1/(1 + D_i) for a product ambient, read
// back as a ChowClass; independent of the ring implementation.
ChowClass oracle_csm_open(const std::vector<int>& factors, const std::vector<std::vector<std::int64_t>>& degrees) {
  using oracle::Poly;
  const std::size_t k = factors.size();
  int top = 0;
  for (int n : factors) top += n;
  Poly p = Poly::constant(k, 1);
  for (std::size_t i = 0; i < k; ++i) p = p * (Poly::constant(k, 1) + Poly::var(k, i)).pow(factors[i] + 1);
  for (const auto& d : degrees) {
    Poly div = Poly::constant(k, 0);
    for (std::size_t i = 0; i < k; ++i) div = div + Poly::var(k, i, d[i]);
    p = p * oracle::inverse_one_plus(div, top);
  }
  const Ambient a = make_product_ambient(factors);
  std::vector<std::int64_t> coeffs;
  for (std::size_t idx = 0; idx < a->basis_size(); ++idx) coeffs.push_back(p.coeff(a->exponents(idx), factors));
  return ChowClass(a, coeffs);
}

}  // namespace

TEST_CASE("arrangement validation") {
  const Ambient p2 = make_product_ambient({2});
  const ChowClass line = ChowClass::monomial(p2, std::vector<int>{1});
  CHECK_NOTHROW(DivisorArrangement(p2, {{"L1", line}, {"L2", line}}));
  CHECK_NOTHROW(DivisorArrangement(p2, {}));
  try {
    DivisorArrangement(p2, {{"L", line}, {"L", line}});
    FAIL("expected duplicate");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DuplicateLabel);
  }
  try {
    DivisorArrangement(p2, {{"pt", ChowClass::point(p2)}});
    FAIL("expected NotADivisorClass");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotADivisorClass);
  }
  try {
    DivisorArrangement(p2, {{"zero", ChowClass::zero(p2)}});
    FAIL("expected NotADivisorClass");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotADivisorClass);
  }
}

TEST_CASE("logarithmic cotangent classes") {
  // Omega^1_{P^1}(log two points) is trivial.
  const auto gm = product_arrangement({1}, {{1}, {1}});
  CHECK(log_cotangent_chern(gm).value() == ChowClass::one(gm.ambient()));

  CHECK(log_cotangent_chern(product_arrangement({2}, {{1}})).to_string() == "1 - 2h + h^2");
  CHECK(log_cotangent_chern(product_arrangement({2}, {{1}, {1}})).to_string() == "1 - h");
}

TEST_CASE("CSM class of the open complement") {
  CHECK(csm_open(product_arrangement({2}, {{1}})).to_string() == "1 + 2h + h^2");
  CHECK(csm_open(product_arrangement({1, 1}, {{1, 1}})).to_string() == "1 + h1 + h2 + 2h1h2");
  CHECK(csm_open(product_arrangement({2}, {})) == tangent_chern(make_product_ambient({2})).value());

  // frozen against the naive expansion oracle
  CHECK(csm_open(product_arrangement({2}, {{1}})) == oracle_csm_open({2}, {{1}}));
  CHECK(csm_open(product_arrangement({1, 1}, {{1, 1}})) == oracle_csm_open({1, 1}, {{1, 1}}));
  CHECK(csm_open(product_arrangement({1, 2}, {{1, 2}, {3, 1}, {2, 2}})) ==
        oracle_csm_open({1, 2}, {{1, 2}, {3, 1}, {2, 2}}));
  CHECK(csm_open(product_arrangement({3}, {{1}, {2}, {3}, {1}})) == oracle_csm_open({3}, {{1}, {2}, {3}, {1}}));
}

TEST_CASE("zero-dimensional CSM class") {
  const auto one_line = product_arrangement({2}, {{1}});
  CHECK(csm_zero(one_line).to_string() == "h^2");
  CHECK(degree(csm_zero(one_line)) == 1);
  CHECK(csm_zero(product_arrangement({1}, {{1}, {1}})).is_zero());
  CHECK(csm_zero(product_arrangement({2}, {{1}, {1}})).is_zero());
}

TEST_CASE("term-by-term expansion of the top log class") {
  CHECK(silred_rhs(product_arrangement({2}, {{1}})).to_string() == "h^2");
  CHECK(silred_rhs(product_arrangement({2}, {{1}, {1}})).is_zero());
  const auto empty = product_arrangement({1, 2}, {});
  CHECK(silred_rhs(empty) == tangent_chern(empty.ambient()).chern(3));
}

TEST_CASE("pushed strata") {
  const auto two_lines = product_arrangement({2}, {{1}, {1}});
  CHECK(stratum_csm_pushed(two_lines, {}).to_string() == "1 + h");
  CHECK(stratum_csm_pushed(two_lines, {0}).to_string() == "h + h^2");
  CHECK(stratum_csm_pushed(two_lines, {0, 1}).to_string() == "h^2");
  try {
    stratum_csm_pushed(two_lines, {2});
    FAIL("expected IndexOutOfRange");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::IndexOutOfRange);
  }
}

TEST_CASE("stratified additivity") {
  const auto two_lines = product_arrangement({2}, {{1}, {1}});
  const AdditivityReport r = additivity_check(two_lines);
  CHECK(r.pass);
  CHECK(r.strata.size() == 4);
  CHECK(r.sum.to_string() == "1 + 3h + 3h^2");

  CHECK(additivity_check(product_arrangement({2}, {})).pass);
  CHECK(additivity_check(product_arrangement({1, 1}, {{1, 0}, {0, 1}})).pass);

  auto [bl, map] = blow_up_surface(as_surface(make_product_ambient({2})), "E");
  const std::vector<std::int64_t> hme{1, -1}, e{0, 1};
  const DivisorArrangement surface_arr(bl, {{"L", ChowClass::divisor(bl, hme)}, {"E", ChowClass::divisor(bl, e)}});
  CHECK(additivity_check(surface_arr).pass);
  CHECK(csm_open(surface_arr).to_string() == "1 + 2H - E + pt");
}

TEST_CASE("component order does not change the zero-dimensional class") {
  const auto a = product_arrangement({1, 2}, {{1, 2}, {3, 1}, {2, 2}});
  const auto b = product_arrangement({1, 2}, {{2, 2}, {1, 2}, {3, 1}});
  CHECK(csm_zero(a) == csm_zero(b));
}
