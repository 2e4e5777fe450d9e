#include <doctest.h>

#include <algorithm>
#include <random>

#include "resonax/admissibility.hpp"
#include "resonax/bounds.hpp"
#include "resonax/enumerate.hpp"
#include "resonax/error.hpp"
#include "resonax/resonance.hpp"
#include "resonax/verify/acceptance.hpp"
#include "resonax/verify/oracle.hpp"

using namespace resonax;

namespace {

MultiIndex mi(std::vector<std::uint32_t> e) { return MultiIndex(std::move(e)); }

Character ch(std::vector<std::int64_t> k) { return make_character(k); }

std::vector<Rational> rationals(std::vector<Rational> v) { return v; }

}  // namespace

TEST_CASE("validate_weight_matrix") {
  auto v = validate_weight_matrix({{1}, {2}});
  CHECK(v.matrix.n() == 2);
  CHECK(v.matrix.r() == 1);
  CHECK(v.warnings.empty());

  v = validate_weight_matrix({{1, 0}, {1, 1}, {1, -1}});
  CHECK(v.matrix.n() == 3);
  CHECK(v.matrix.r() == 2);
  CHECK(v.matrix.rank() == 2);
  CHECK(v.warnings.empty());

  v = validate_weight_matrix({{1, 1}, {2, 2}});
  CHECK(v.matrix.rank() == 1);
  REQUIRE(v.warnings.size() == 1);
  CHECK(v.warnings[0].find("rank") != std::string::npos);

  CHECK_THROWS_AS(WeightMatrix({}), InvalidInput);
  CHECK_THROWS_AS(WeightMatrix({{1, 2}, {3}}), InvalidInput);
  CHECK_THROWS_AS(WeightMatrix(std::vector<std::vector<std::int64_t>>{{}}), InvalidInput);
}

TEST_CASE("check_admissible examples") {
  auto c = check_admissible(WeightMatrix({{1}, {2}}));
  REQUIRE(c.admissible());
  CHECK(*c.positive_functional == rationals({1}));

  c = check_admissible(WeightMatrix({{1}, {-1}}));
  REQUIRE_FALSE(c.admissible());
  CHECK(*c.witness == mi({1, 1}));
  CHECK(oracle::invariant_monomial(WeightMatrix({{1}, {-1}}), 4) == mi({1, 1}));

  const WeightMatrix a({{1, 0}, {1, 1}, {1, -1}});
  c = check_admissible(a);
  REQUIRE(c.admissible());
  CHECK(*c.positive_functional == rationals({1, 0}));
  CHECK(verify_certificate(a, c));
  CHECK(oracle::certificate_sound(a, c));
}

TEST_CASE("positive_functional") {
  CHECK(positive_functional(WeightMatrix({{1}, {2}})) == rationals({1}));
  CHECK(positive_functional(WeightMatrix({{2}, {3}})) == rationals({Rational(1, 2)}));
  CHECK(positive_functional(WeightMatrix({{1, 0}, {1, 1}, {1, -1}})) == rationals({1, 0}));
  CHECK_THROWS_AS(positive_functional(WeightMatrix({{1}, {-1}})), InadmissibleError);
  CHECK_THROWS_AS(positive_functional(WeightMatrix({{0, 0}})), InadmissibleError);
}

TEST_CASE("witness scales to integers") {
  // 2 a_1 + 3 a_2 = 0 forces a witness with unequal exponents.
  const WeightMatrix a({{3}, {-2}});
  const auto c = check_admissible(a);
  REQUIRE_FALSE(c.admissible());
  CHECK(*c.witness == mi({2, 3}));
  CHECK(oracle::certificate_sound(a, c));
}

TEST_CASE("tampered certificates are rejected") {
  const WeightMatrix a({{1}, {2}});
  auto c = check_admissible(a);
  c.positive_functional = rationals({Rational(1, 2)});
  CHECK_FALSE(verify_certificate(a, c));
  CHECK_FALSE(oracle::certificate_sound(a, c));
}

TEST_CASE("enumerate_weight_space examples") {
  const WeightMatrix a({{1}, {2}});
  auto s = enumerate_weight_space(a, ch({2}));
  REQUIRE(s);
  CHECK(s->basis == std::vector{mi({0, 1}), mi({2, 0})});
  CHECK(s->min_degree == 1);
  CHECK(s->max_degree == 2);

  s = enumerate_weight_space(a, ch({0}));
  REQUIRE(s);
  CHECK(s->basis == std::vector{mi({0, 0})});
  CHECK(s->max_degree == 0);

  CHECK_FALSE(enumerate_weight_space(a, ch({-1})));

  s = enumerate_weight_space(WeightMatrix({{1, 0}, {1, 1}, {1, -1}}), ch({2, 0}));
  REQUIRE(s);
  CHECK(s->basis == std::vector{mi({0, 1, 1}), mi({2, 0, 0})});
  CHECK(s->min_degree == 2);
  CHECK(s->max_degree == 2);

  CHECK_THROWS_AS(enumerate_weight_space(WeightMatrix({{1}, {-1}}), ch({0})), InadmissibleError);
  CHECK_THROWS_AS(enumerate_weight_space(a, ch({1, 1})), InvalidInput);
}

TEST_CASE("degree_extremes") {
  const WeightMatrix a({{1}, {2}});
  CHECK(degree_extremes(a, ch({3})) == std::pair<std::uint64_t, std::uint64_t>{2, 3});
  CHECK(degree_extremes(a, ch({0})) == std::pair<std::uint64_t, std::uint64_t>{0, 0});
  CHECK(degree_extremes(WeightMatrix({{1}, {3}}), ch({9})) == std::pair<std::uint64_t, std::uint64_t>{3, 9});
  CHECK_FALSE(degree_extremes(a, ch({-2})));
}

TEST_CASE("machine and exact kernels agree") {
  const WeightMatrix a({{3, 1}, {5, -1}, {1, 0}, {2, 1}});
  const WeightSpaceEnumerator en(a);
  for (std::int64_t k0 = 0; k0 <= 30; k0 += 3) {
    for (std::int64_t k1 = -10; k1 <= 10; k1 += 2) {
      const auto exact = en.enumerate(ch({k0, k1}), EnumerationKernel::exact);
      const auto machine = en.enumerate(ch({k0, k1}), EnumerationKernel::machine);
      REQUIRE(exact.has_value() == machine.has_value());
      if (exact) CHECK(exact->basis == machine->basis);
    }
  }
}

TEST_CASE("huge characters") {
  const WeightMatrix a({{1}, {1}});
  Character k{BigInt("10000000000")};
  CHECK_THROWS_AS(enumerate_weight_space(a, k), OverflowError);

  // Within exponent range but beyond the int64 guard: the exact kernel takes over.
  const WeightMatrix big({{1000000000000000000LL}, {2000000000000000000LL}});
  const WeightSpaceEnumerator en(big);
  Character k2{BigInt("4000000000000000000")};
  CHECK_THROWS_AS(en.enumerate(k2, EnumerationKernel::machine), OverflowError);
  const auto s = en.enumerate(k2);
  REQUIRE(s);
  CHECK(s->basis == std::vector{mi({0, 2}), mi({2, 1}), mi({4, 0})});
}

TEST_CASE("resonance examples") {
  auto r = resonance(WeightMatrix({{1}, {2}}));
  CHECK(r.resonance_sets[0] == std::vector{mi({1, 0})});
  CHECK(r.resonance_sets[1] == std::vector{mi({0, 1}), mi({2, 0})});
  CHECK(r.orders == std::vector<std::uint64_t>{1, 2});
  CHECK(r.order == 2);

  r = resonance(WeightMatrix({{2}, {3}}));
  CHECK(r.orders == std::vector<std::uint64_t>{1, 1});
  CHECK(r.order == 1);

  r = resonance(WeightMatrix({{1, 0}, {0, 1}}));
  CHECK(r.orders == std::vector<std::uint64_t>{1, 1});
  CHECK(r.linear_characters == std::vector{ch({0, 1}), ch({1, 0})});
}

TEST_CASE("quasi_resonance examples") {
  auto q = quasi_resonance(WeightMatrix({{1}, {2}}), WeightMatrix({{1}, {2}}));
  CHECK(q.orders == std::vector<std::uint64_t>{2, 4});
  CHECK(q.order == 4);

  q = quasi_resonance(WeightMatrix({{1}, {1}}), WeightMatrix({{1}, {3}}));
  CHECK(q.orders == std::vector<std::uint64_t>{1, 3});
  std::vector<Character> k2;
  for (const auto& e : q.sets[1]) k2.push_back(e.character);
  CHECK(k2 == std::vector{ch({0}), ch({1}), ch({2}), ch({3})});

  q = quasi_resonance(WeightMatrix({{2}, {3}}), WeightMatrix({{2}, {3}}));
  CHECK(q.orders == std::vector<std::uint64_t>{1, 1});
  CHECK(q.order == 1);

  CHECK_THROWS_AS(quasi_resonance(WeightMatrix(std::vector<std::vector<std::int64_t>>{{1}}), WeightMatrix({{1}, {2}})), InvalidInput);
}

TEST_CASE("is_cartan_linear") {
  CHECK(is_cartan_linear(WeightMatrix({{2}, {3}}), WeightMatrix({{2}, {3}})).linear);
  const auto v = is_cartan_linear(WeightMatrix({{1}, {2}}), WeightMatrix({{1}, {2}}));
  CHECK_FALSE(v.linear);
  CHECK(v.source_order == 2);
  CHECK(is_cartan_linear(WeightMatrix({{1, 0}, {0, 1}}), WeightMatrix({{1, 0}, {0, 1}})).linear);
}

TEST_CASE("quasi_circular_bound examples") {
  auto check = [](std::vector<std::int64_t> m, Rational coarse, std::uint64_t exact) {
    const auto b = quasi_circular_bound(m, m);
    CHECK(b.coarse == coarse);
    CHECK(b.exact == exact);
  };
  check({1, 2}, 4, 4);
  check({2, 3}, Rational(9, 4), 1);
  check({1, 1}, 1, 1);
  CHECK(quasi_circular_bound(std::vector<std::int64_t>{2, 3}, std::vector<std::int64_t>{2, 3}).coarse_degree == 2);

  const auto b = quasi_circular_bound(std::vector<std::int64_t>{3, 1}, std::vector<std::int64_t>{1, 1});
  CHECK(b.source_permutation == std::vector<std::size_t>{1, 0});
  CHECK_THROWS_AS(quasi_circular_bound(std::vector<std::int64_t>{0, 1}, std::vector<std::int64_t>{1, 1}),
                  InvalidInput);
}

TEST_CASE("nonneg_weight_bound examples") {
  auto b = nonneg_weight_bound(WeightMatrix({{1}, {3}}));
  CHECK(b.bounds == rationals({3, 9}));
  CHECK(b.exact == std::vector<std::uint64_t>{3, 9});

  b = nonneg_weight_bound(WeightMatrix({{2}, {3}}));
  CHECK(b.bounds == rationals({Rational(3, 2), Rational(9, 4)}));
  CHECK(b.exact == std::vector<std::uint64_t>{1, 1});
  CHECK(b.global_bound == Rational(9, 4));

  b = nonneg_weight_bound(WeightMatrix({{1, 0}, {0, 1}}));
  CHECK(b.bounds == rationals({1, 1}));
  CHECK(b.exact == std::vector<std::uint64_t>{1, 1});

  CHECK_THROWS_AS(nonneg_weight_bound(WeightMatrix({{1}, {-1}})), InvalidInput);
}

TEST_CASE("property: enumeration matches the box scan for |k_j| <= 20") {
  const auto matrices = acceptance::random_matrices(7, 60, 3, 2, 3, true);
  std::mt19937_64 rng(11);
  for (const auto& a : matrices) {
    const WeightSpaceEnumerator en(a);
    for (int t = 0; t < 40; ++t) {
      std::vector<std::int64_t> k(a.r());
      for (auto& x : k) x = static_cast<std::int64_t>(rng() % 41) - 20;
      const auto fast = en.enumerate(make_character(k));
      const auto slow = oracle::box_scan_weight_space(a, k);
      CHECK((fast ? fast->basis : std::vector<MultiIndex>{}) == slow);
    }
  }
}

TEST_CASE("property: zero character, divergence, lexicographic order") {
  const auto matrices = acceptance::random_matrices(8, 40, 4, 2, 3, true);
  for (const auto& a : matrices) {
    const WeightSpaceEnumerator en(a);
    const auto& lambda = en.functional();
    BigInt max_weight = 0;
    for (std::size_t i = 0; i < a.n(); ++i) {
      BigInt w = 0;
      for (std::size_t j = 0; j < a.r(); ++j) w += lambda[j] * a(i, j);
      if (w > max_weight) max_weight = w;
    }
    for (std::int64_t k0 = -8; k0 <= 8; ++k0) {
      for (std::int64_t k1 = -8; k1 <= 8; ++k1) {
        std::vector<std::int64_t> kv{k0, k1};
        kv.resize(a.r());
        if (a.r() == 1 && k1 != 0) continue;
        const auto k = make_character(kv);
        const auto s = en.enumerate(k);
        if (!s) continue;
        CHECK((s->min_degree == 0) == is_zero(k));
        BigInt kl = 0;
        for (std::size_t j = 0; j < a.r(); ++j) kl += lambda[j] * k[j];
        // d_k * max_i(a_i . lambda) >= k . lambda
        CHECK(BigInt(static_cast<unsigned long>(s->min_degree)) * max_weight >= kl);
        CHECK(std::is_sorted(s->basis.begin(), s->basis.end()));
        CHECK(std::adjacent_find(s->basis.begin(), s->basis.end()) == s->basis.end());
        for (const auto& alpha : s->basis) CHECK(a.character_of(alpha) == k);
      }
    }
  }
}

TEST_CASE("property: certificates re-verify") {
  const auto matrices = acceptance::random_matrices(9, 300, 5, 3, 4, false);
  std::size_t admissible = 0;
  for (const auto& a : matrices) {
    const auto c = check_admissible(a);
    admissible += c.admissible();
    CHECK(oracle::certificate_sound(a, c));
    CHECK(verify_certificate(a, c));
    if (!c.admissible()) continue;
    // A grid functional exists whenever elimination finds one, for these small entries.
    if (a.r() <= 2) CHECK_FALSE(oracle::grid_functionals(a).empty());
  }
  CHECK(admissible > 50);
  CHECK(admissible < 300);
}

TEST_CASE("property: inadmissible verdicts agree with the invariant-monomial scan") {
  const auto matrices = acceptance::random_matrices(10, 200, 3, 2, 2, false);
  for (const auto& a : matrices) {
    const auto c = check_admissible(a);
    const auto scan = oracle::invariant_monomial(a, 6);
    if (scan) CHECK_FALSE(c.admissible());
    if (c.admissible()) CHECK_FALSE(scan);
  }
}

TEST_CASE("property: quasi-resonance against brute force, monotone and Cartan") {
  const auto matrices = acceptance::random_matrices(12, 60, 3, 2, 3, true);
  for (std::size_t t = 0; t + 1 < matrices.size(); ++t) {
    const auto& a = matrices[t];
    const auto mu = resonance(a);
    const auto q = quasi_resonance(a, a);
    const auto brute = oracle::brute_quasi_resonance(a, a);
    CHECK(q.orders == brute.orders);
    CHECK(q.target_orders == brute.target_orders);
    for (std::size_t i = 0; i < a.n(); ++i) CHECK(q.orders[i] >= mu.orders[i]);
    if (mu.order == 1) CHECK(q.order == 1);

    const auto& b = matrices[t + 1];
    if (b.n() == a.n()) {
      CHECK(quasi_resonance(a, b).orders == oracle::brute_quasi_resonance(a, b).orders);
    }
  }
}

TEST_CASE("property: coarse bounds dominate") {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 1 + rng() % 4;
    std::vector<std::int64_t> m(n), mp(n);
    for (auto& x : m) x = 1 + static_cast<std::int64_t>(rng() % 6);
    for (auto& x : mp) x = 1 + static_cast<std::int64_t>(rng() % 6);
    const auto b = quasi_circular_bound(m, mp);
    CHECK(Rational(static_cast<long>(b.exact)) <= b.coarse);
  }
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 1 + rng() % 3;
    const std::size_t r = 1 + rng() % 2;
    std::vector<std::vector<std::int64_t>> rows(n, std::vector<std::int64_t>(r));
    for (auto& row : rows) {
      for (auto& x : row) x = static_cast<std::int64_t>(rng() % 4);
      if (std::all_of(row.begin(), row.end(), [](auto x) { return x == 0; })) row[0] = 1;
    }
    const auto b = nonneg_weight_bound(WeightMatrix(rows));
    for (std::size_t i = 0; i < n; ++i) CHECK(Rational(static_cast<long>(b.exact[i])) <= b.bounds[i]);
    CHECK(Rational(static_cast<long>(b.exact_global)) <= b.global_bound);
  }
}

TEST_CASE("property: repeated runs are identical") {
  const WeightMatrix a({{1, 0}, {1, 1}, {1, -1}, {2, 1}});
  const auto first = quasi_resonance(a, a);
  const auto second = quasi_resonance(a, a);
  CHECK(first.orders == second.orders);
  REQUIRE(first.sets.size() == second.sets.size());
  for (std::size_t i = 0; i < first.sets.size(); ++i) {
    REQUIRE(first.sets[i].size() == second.sets[i].size());
    for (std::size_t j = 0; j < first.sets[i].size(); ++j) {
      CHECK(first.sets[i][j].character == second.sets[i][j].character);
    }
    CHECK(std::is_sorted(first.sets[i].begin(), first.sets[i].end(),
                         [](const auto& x, const auto& y) { return LexLess{}(x.character, y.character); }));
  }
}
