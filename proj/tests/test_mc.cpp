#include <doctest.h>

#include <cmath>
#include <numbers>

#include "resonax/error.hpp"
#include "resonax/mc.hpp"
#include "resonax/serialize.hpp"
#include "resonax/verify/oracle.hpp"

using namespace resonax;

namespace {

constexpr double kPi = std::numbers::pi;

Polynomial one(std::size_t n) { return Polynomial::constant(n, GaussianRational(1)); }

Polynomial mono(std::vector<std::uint32_t> e) {
  const std::size_t n = e.size();
  return Polynomial::monomial(n, MultiIndex(std::move(e)));
}

void check_within(const MCEstimate& est, std::complex<double> expect, double sigmas = kSigmaThreshold) {
  CHECK(std::abs(est.value.real() - expect.real()) <= sigmas * est.stderr_re + 1e-12);
  CHECK(std::abs(est.value.imag() - expect.imag()) <= sigmas * est.stderr_im + 1e-12);
}

std::vector<MultiIndex> monomials_up_to(std::size_t n, std::uint32_t d) {
  std::vector<MultiIndex> out;
  std::vector<std::uint32_t> e(n, 0);
  auto rec = [&](auto&& self, std::size_t i, std::uint32_t left) -> void {
    if (i == n) {
      out.emplace_back(e);
      return;
    }
    for (std::uint32_t x = 0; x <= left; ++x) {
      e[i] = x;
      self(self, i + 1, left - x);
    }
    e[i] = 0;
  };
  rec(rec, 0, d);
  return out;
}

}  // namespace

TEST_CASE("sampled points lie in the domain") {
  const auto ball = DomainSpec::unit_ball(2);
  const auto s = sample_domain(ball, 1, 20000);
  REQUIRE(s.size() == 20000);
  for (std::size_t j = 0; j < s.size(); ++j) {
    const auto z = s.point(j);
    REQUIRE(std::norm(z[0]) + std::norm(z[1]) < 1.0);
  }
  // Enclosing polydisc of radius 1 in C^2: acceptance is vol(B^4)/pi^2 = 1/2.
  CHECK(std::abs(s.acceptance_ratio() - 0.5) < 0.01);

  const auto image = DomainSpec::shear_image(ball, 3);
  const auto t = sample_domain(image, 2, 20000);
  for (std::size_t j = 0; j < t.size(); ++j) {
    const auto w = t.point(j);
    REQUIRE(std::norm(w[0]) + std::norm(w[1] - w[0] * w[0] * w[0]) < 1.0);
  }

  const auto disc = sample_domain(DomainSpec::polydisc({1.0, 1.0}), 3, 5000);
  CHECK(disc.acceptance_ratio() == 1.0);
}

TEST_CASE("sampling is independent of the worker count") {
  const auto image = DomainSpec::shear_image(DomainSpec::unit_ball(2), 2);
  const auto a = sample_domain(image, 99, 50000, {1});
  const auto b = sample_domain(image, 99, 50000, {4});
  CHECK(a.candidates == b.candidates);
  CHECK(a.re == b.re);
  CHECK(a.im == b.im);

  const auto p = mono({1, 2}) + mono({0, 1});
  const auto e1 = mc_inner_product(image, p, p, 5, 100000, {1});
  const auto e3 = mc_inner_product(image, p, p, 5, 100000, {3});
  CHECK(e1.value == e3.value);
  CHECK(e1.stderr_re == e3.stderr_re);
}

TEST_CASE("domain construction errors") {
  CHECK_THROWS_AS(DomainSpec::polydisc({1.0, 0.0}), InvalidInput);
  CHECK_THROWS_AS(DomainSpec::weighted_ellipsoid({1.0}, {0.5}), InvalidInput);
  CHECK_THROWS_AS(DomainSpec::shear_image(DomainSpec::unit_ball(2), PolyMap::shear(2, 2), PolyMap::shear_inverse(2, 3)),
                  InvalidInput);
  // The ball in C^20 fills 1/20! of its enclosing polydisc.
  CHECK_THROWS_AS(sample_domain(DomainSpec::unit_ball(20), 1, 10), DegenerateDomainError);
  CHECK_THROWS_AS(sample_domain(DomainSpec::weighted_ellipsoid(std::vector<double>(12, 1.0), std::vector<double>(12, 1.0)), 1, 10),
                  DegenerateDomainError);
  CHECK_NOTHROW(sample_domain(DomainSpec::unit_ball(8), 1, 10));
}

TEST_CASE("inner product examples") {
  const auto ball = DomainSpec::unit_ball(2);
  const auto vol = mc_inner_product(ball, one(2), one(2));
  check_within(vol, kPi * kPi / 2);
  CHECK(std::abs(vol.value.real() - kPi * kPi / 2) / (kPi * kPi / 2) < 0.01);

  check_within(mc_inner_product(ball, mono({1, 0}), mono({0, 1})), 0.0);

  const auto disc = DomainSpec::polydisc({1.0, 1.0});
  check_within(mc_inner_product(disc, mono({1, 0}), mono({1, 0})), kPi * kPi / 2);

  const auto ell = DomainSpec::weighted_ellipsoid({1.0, 4.0}, {1.0, 1.0});
  // |z1|^2 + 4|z2|^2 < 1 is the ball scaled by 1/2 in z2.
  check_within(mc_inner_product(ell, one(2), one(2), 7, 400000), kPi * kPi / 8);
}

TEST_CASE("ball monomial norms against the quadrature oracle") {
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto samples = sample_domain(DomainSpec::unit_ball(n), kDefaultSeed, 400000);
    const auto alphas = monomials_up_to(n, 3);
    std::vector<Polynomial> polys;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t t = 0; t < alphas.size(); ++t) {
      polys.push_back(Polynomial::monomial(n, alphas[t]));
      pairs.emplace_back(t, t);
    }
    const auto est = estimate_inner_products(samples, polys, pairs);
    for (std::size_t t = 0; t < alphas.size(); ++t) {
      const double exact = oracle::ball_moment_closed_form(alphas[t]);
      CHECK(std::abs(oracle::ball_moment_quadrature(alphas[t], n == 3 ? 60 : 400) - exact) < 1e-6 * exact);
      check_within(est[t], exact);
    }
  }
}

TEST_CASE("Bonferroni threshold") {
  CHECK(z_threshold(1) == kSigmaThreshold);
  CHECK(z_threshold(90) == kSigmaThreshold);
  CHECK(z_threshold(100000) > kSigmaThreshold);
  CHECK(family_error_bound(90, 4.0) < kFamilyErrorBudget);
  CHECK(family_error_bound(100000, z_threshold(100000)) <= kFamilyErrorBudget * 1.0001);
}

TEST_CASE("orthogonality examples") {
  const auto ball = DomainSpec::unit_ball(2);
  auto r = check_orthogonality(ball, WeightMatrix({{1}, {1}}), 3);
  CHECK(r.pass());
  CHECK(r.family_error < kFamilyErrorBudget);
  CHECK_FALSE(r.pairs.empty());
  for (const auto& p : r.pairs) CHECK(p.alpha_character != p.beta_character);

  const auto image = DomainSpec::shear_image(ball, 2);
  r = check_orthogonality(image, WeightMatrix({{1}, {2}}), 2, kDefaultSeed, 400000);
  CHECK(r.pass());

  r = check_orthogonality(DomainSpec::polydisc({1.0, 1.0}), WeightMatrix({{1, 0}, {0, 1}}), 1, kDefaultSeed, 200000);
  CHECK(r.pass());
}

TEST_CASE("orthogonality fails for weights the domain does not carry") {
  // The shear image is not circular, so the diagonal weights (1,1) pair w2 with w1^3 nontrivially.
  const auto image = DomainSpec::shear_image(DomainSpec::unit_ball(2), 3);
  const auto r = check_orthogonality(image, WeightMatrix({{1}, {1}}), 3, kDefaultSeed, 400000);
  CHECK_FALSE(r.pass());
}

TEST_CASE("change of variables examples") {
  const auto ball = DomainSpec::unit_ball(2);
  const auto image = DomainSpec::shear_image(ball, 3);
  const auto f = PolyMap::shear(2, 3);
  const auto g = PolyMap::shear_inverse(2, 3);

  auto r = check_change_of_variables(f, g, ball, image, mono({3, 0}), Polynomial::variable(2, 1));
  CHECK(r.pass);
  CHECK(r.source_jacobian == one(2));
  check_within(r.lhs, oracle::ball_moment_closed_form(MultiIndex({3, 0})));

  const auto id = PolyMap::identity(2);
  r = check_change_of_variables(id, id, ball, ball, mono({1, 1}) + mono({2, 0}), mono({0, 2}), 3, 100000);
  CHECK(r.pass);
  CHECK(r.lhs.value == r.rhs.value);

  const auto image2 = DomainSpec::shear_image(ball, 2);
  r = check_change_of_variables(PolyMap::shear(2, 2), PolyMap::shear_inverse(2, 2), ball, image2, one(2), one(2));
  CHECK(r.pass);
  check_within(r.lhs, kPi * kPi / 2);

  CHECK_THROWS_AS(check_change_of_variables(f, PolyMap::shear_inverse(2, 2), ball, image, one(2), one(2)),
                  InvalidInput);
}

TEST_CASE("shear preserves volume") {
  const auto ball = DomainSpec::unit_ball(2);
  const auto v0 = mc_inner_product(ball, one(2), one(2), 11, 400000);
  for (std::uint32_t k = 1; k <= 4; ++k) {
    const auto vk = mc_inner_product(DomainSpec::shear_image(ball, k), one(2), one(2), 12 + k, 400000);
    CHECK(std::abs(v0.value.real() - vk.value.real()) <= kSigmaThreshold * (v0.stderr_re + vk.stderr_re));
  }
}

TEST_CASE("invariance examples") {
  const auto ball = DomainSpec::unit_ball(2);
  for (std::int64_t k = 2; k <= 5; ++k) {
    const auto r = check_invariance(DomainSpec::shear_image(ball, static_cast<std::uint32_t>(k)),
                                    WeightMatrix({{1}, {k}}), kDefaultSeed, 50000);
    CHECK(r.pass());
    CHECK(r.checked == 50000);
  }
  CHECK(check_invariance(ball, WeightMatrix({{1, 0}, {0, 1}}), kDefaultSeed, 50000).pass());

  const auto bad = check_invariance(DomainSpec::shear_image(ball, 2), WeightMatrix({{1}, {3}}), kDefaultSeed, 50000);
  CHECK_FALSE(bad.pass());
  REQUIRE(bad.witness);
  CHECK(bad.witness->value >= 1.0);
  // The witness replays: its image really is outside.
  const auto image = DomainSpec::shear_image(ball, 2);
  CHECK(image.contains(bad.witness->point));
  CHECK_FALSE(image.contains(bad.witness->image));
}

TEST_CASE("domain specs round-trip through JSON") {
  const auto ball = DomainSpec::unit_ball(2);
  const std::vector<DomainSpec> specs{ball, DomainSpec::polydisc({1.0, 0.5}),
                                      DomainSpec::weighted_ellipsoid({1.0, 2.0}, {1.0, 3.0}),
                                      DomainSpec::shear_image(ball, 3)};
  for (const auto& spec : specs) {
    const auto back = io::parse_domain(io::to_json(spec));
    CHECK(back.kind() == spec.kind());
    CHECK(back.bounding_radii() == spec.bounding_radii());
    CHECK(io::to_json(back) == io::to_json(spec));
    const std::vector<std::complex<double>> z{{0.3, 0.1}, {-0.2, 0.4}};
    CHECK(back.defining_value(z) == spec.defining_value(z));
  }
  const WeightMatrix a({{1, 0}, {1, 1}, {1, -1}});
  CHECK(io::parse_weight_matrix(io::to_json(a)).matrix == a);
  CHECK_THROWS_AS(io::parse_domain(io::Json::parse(R"({"kind":"torus"})")), InvalidInput);
}
