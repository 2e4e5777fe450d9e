#include <doctest.h>

#include <cmath>
#include <numbers>

#include "resonax/verify/acceptance.hpp"
#include "resonax/verify/oracle.hpp"

using namespace resonax;

namespace {

MultiIndex mi(std::vector<std::uint32_t> e) { return MultiIndex(std::move(e)); }

}  // namespace

TEST_CASE("ball moments: closed form and quadrature") {
  const double pi2 = std::numbers::pi * std::numbers::pi;
  CHECK(oracle::ball_moment_closed_form(mi({0, 0})) == doctest::Approx(pi2 / 2).epsilon(1e-14));
  CHECK(oracle::ball_moment_closed_form(mi({3, 0})) == doctest::Approx(pi2 / 20).epsilon(1e-14));
  CHECK(oracle::ball_moment_closed_form(mi({1})) == doctest::Approx(std::numbers::pi / 2).epsilon(1e-14));
  CHECK(oracle::ball_moment_quadrature(mi({0, 0})) == doctest::Approx(pi2 / 2).epsilon(1e-9));
  CHECK(oracle::ball_moment_quadrature(mi({3, 0})) == doctest::Approx(pi2 / 20).epsilon(1e-9));
  CHECK(oracle::ball_moment_quadrature(mi({1, 1, 1}), 80) ==
        doctest::Approx(oracle::ball_moment_closed_form(mi({1, 1, 1}))).epsilon(1e-7));
  CHECK_THROWS(oracle::ball_moment_quadrature(mi({0, 0, 0, 0})));
}

TEST_CASE("box scan") {
  const WeightMatrix a({{1}, {2}});
  const std::vector<std::int64_t> k{4};
  CHECK(oracle::box_scan_weight_space(a, k) == std::vector{mi({0, 2}), mi({2, 1}), mi({4, 0})});
  const std::vector<std::int64_t> neg{-1};
  CHECK(oracle::box_scan_weight_space(a, neg).empty());
  CHECK_THROWS(oracle::box_scan_weight_space(WeightMatrix({{1}, {-1}}), k));

  const WeightMatrix b({{1, 0}, {1, 1}, {1, -1}});
  const std::vector<std::int64_t> k2{2, 0};
  CHECK(oracle::box_scan_weight_space(b, k2) == std::vector{mi({0, 1, 1}), mi({2, 0, 0})});
}

TEST_CASE("invariant monomials and certificates") {
  CHECK(oracle::invariant_monomial(WeightMatrix({{2}, {-3}}), 6) == mi({3, 2}));
  CHECK_FALSE(oracle::invariant_monomial(WeightMatrix({{2}, {-3}}), 4));
  CHECK_FALSE(oracle::invariant_monomial(WeightMatrix({{1}, {2}}), 8));

  AdmissibilityCertificate bogus;
  bogus.verdict = Verdict::inadmissible;
  bogus.witness = mi({1, 2});
  CHECK_FALSE(oracle::certificate_sound(WeightMatrix({{1}, {-1}}), bogus));
  bogus.witness = mi({0, 0});
  CHECK_FALSE(oracle::certificate_sound(WeightMatrix({{1}, {-1}}), bogus));
  bogus.witness = mi({3, 3});
  CHECK(oracle::certificate_sound(WeightMatrix({{1}, {-1}}), bogus));
}

TEST_CASE("brute-force quasi-resonance") {
  const auto q = oracle::brute_quasi_resonance(WeightMatrix({{1}, {2}}), WeightMatrix({{1}, {2}}));
  CHECK(q.target_orders == std::vector<std::uint64_t>{1, 2});
  CHECK(q.orders == std::vector<std::uint64_t>{2, 4});
  CHECK(q.order == 4);
  CHECK(oracle::brute_quasi_resonance(WeightMatrix({{2}, {3}}), WeightMatrix({{2}, {3}})).order == 1);
}

TEST_CASE("random matrix generator is deterministic and respects its ranges") {
  const auto a = acceptance::random_matrices(5, 50, 4, 2, 3, true);
  const auto b = acceptance::random_matrices(5, 50, 4, 2, 3, true);
  REQUIRE(a.size() == 50);
  CHECK(a == b);
  for (const auto& m : a) {
    CHECK(m.n() <= 4);
    CHECK(m.r() <= 2);
    for (const auto& row : m.rows())
      for (auto x : row) CHECK(std::abs(x) <= 3);
  }
}
