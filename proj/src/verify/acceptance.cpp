#include "resonax/verify/acceptance.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <set>
#include <sstream>

#include "resonax/admissibility.hpp"
#include "resonax/bounds.hpp"
#include "resonax/compliance.hpp"
#include "resonax/enumerate.hpp"
#include "resonax/resonance.hpp"
#include "resonax/verify/oracle.hpp"

namespace resonax::acceptance {
namespace {

constexpr std::uint64_t kMatrixSeed = 20240601;
constexpr std::uint64_t kCertificateSeed = 20240602;
constexpr std::uint64_t kWeightVectorSeed = 20240603;

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

CriterionResult finish(int id, std::string name, double limit, const Stopwatch& watch, bool ok,
                       std::string detail) {
  CriterionResult r;
  r.id = id;
  r.name = std::move(name);
  r.seconds = watch.seconds();
  r.time_limit = limit;
  r.pass = ok && r.seconds < limit;
  r.detail = std::move(detail);
  return r;
}

const std::vector<WeightMatrix>& criterion4_matrices() {
  static const auto matrices = random_matrices(kMatrixSeed, 200, 4, 2, 3, true);
  return matrices;
}

std::string fmt(const char* pattern, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, pattern, args...);
  return buf;
}

}  // namespace

std::vector<WeightMatrix> random_matrices(std::uint64_t seed, std::size_t count, std::size_t max_n,
                                          std::size_t max_r, std::int64_t bound, bool admissible_only) {
  std::mt19937_64 rng(seed);
  auto draw = [&](std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
  };
  std::vector<WeightMatrix> out;
  while (out.size() < count) {
    const auto n = static_cast<std::size_t>(draw(1, static_cast<std::int64_t>(max_n)));
    const auto r = static_cast<std::size_t>(draw(1, static_cast<std::int64_t>(max_r)));
    std::vector<std::vector<std::int64_t>> rows(n, std::vector<std::int64_t>(r));
    for (auto& row : rows)
      for (auto& x : row) x = draw(-bound, bound);
    WeightMatrix a(std::move(rows));
    if (admissible_only && !check_admissible(a).admissible()) continue;
    out.push_back(std::move(a));
  }
  return out;
}

CriterionResult remark_linear_23() {
  Stopwatch watch;
  const auto bound = nonneg_weight_bound(WeightMatrix({{2}, {3}}));
  const bool ok = bound.exact_global == 1 && bound.global_bound == Rational(9, 4);
  return finish(1, "weights (2,3): exact order 1, coarse bound 9/4", 1.0, watch, ok,
                "exact=" + std::to_string(bound.exact_global) + " coarse=" + to_string(bound.global_bound));
}

CriterionResult quasi_circular_consistency() {
  Stopwatch watch;
  const std::int64_t m[] = {1, 2};
  const auto fixed = quasi_circular_bound(m, m);
  bool ok = fixed.exact == 4 && fixed.coarse == 4;

  std::mt19937_64 rng(kWeightVectorSeed);
  auto vec = [&](std::size_t n) {
    std::vector<std::int64_t> v(n);
    for (auto& x : v) x = 1 + static_cast<std::int64_t>(rng() % 6);
    return v;
  };
  int violations = 0;
  std::uint64_t max_exact = 0;
  for (int t = 0; t < 100; ++t) {
    const auto n = 1 + static_cast<std::size_t>(rng() % 4);
    const auto src = vec(n);
    const auto dst = vec(n);
    try {
      const auto b = quasi_circular_bound(src, dst);
      if (Rational(static_cast<long>(b.exact)) > b.coarse) ++violations;
      max_exact = std::max(max_exact, b.exact);
    } catch (const std::logic_error&) {
      ++violations;
    }
  }
  ok = ok && violations == 0;
  return finish(2, "quasi-circular exact <= coarse (fixture + 100 random)", 10.0, watch, ok,
                fmt("(1,2)->(1,2): exact=%llu coarse=%s; random violations=%d, max exact=%llu",
                    static_cast<unsigned long long>(fixed.exact), to_string(fixed.coarse).c_str(), violations,
                    static_cast<unsigned long long>(max_exact)));
}

CriterionResult shear_family() {
  Stopwatch watch;
  bool ok = true;
  std::string failed;
  const WeightMatrix source({{1}, {1}});
  for (std::uint32_t k = 1; k <= 10; ++k) {
    const WeightMatrix target({{1}, {static_cast<std::int64_t>(k)}});
    const auto report = check_compliance(PolyMap::shear(2, k), source, target);
    const auto& f2 = report.components.at(1);
    const bool this_ok = report.pass() && f2.degree == Degree(k) && report.quasi.orders.at(1) == k &&
                         report.jacobian_constant && report.jacobian == Polynomial::constant(2, GaussianRational(1));
    if (!this_ok) {
      ok = false;
      failed += " k=" + std::to_string(k);
    }
  }
  return finish(3, "shear family k=1..10: compliant, deg f2 = nu_2 = k, Jacobian 1", 5.0, watch, ok,
                ok ? "10/10 maps compliant" : "failed:" + failed);
}

CriterionResult oracle_equivalence() {
  Stopwatch watch;
  const auto& matrices = criterion4_matrices();
  std::size_t characters = 0, nonempty = 0, mismatches = 0;
  for (const auto& a : matrices) {
    const WeightSpaceEnumerator en(a);
    const std::size_t r = a.r();
    std::vector<std::int64_t> k(r, -6);
    while (true) {
      const auto fast = en.enumerate(make_character(k));
      const auto slow = oracle::box_scan_weight_space(a, k);
      const auto& fast_basis = fast ? fast->basis : std::vector<MultiIndex>{};
      if (fast_basis != slow) ++mismatches;
      ++characters;
      if (!slow.empty()) ++nonempty;
      std::size_t j = 0;
      while (j < r && k[j] == 6) k[j++] = -6;
      if (j == r) break;
      ++k[j];
    }
  }
  return finish(4, "pruned enumeration equals box scan (200 matrices, |k_j| <= 6)", 60.0, watch,
                mismatches == 0,
                fmt("%zu characters (%zu nonempty), %zu mismatches", characters, nonempty, mismatches));
}

CriterionResult certificate_soundness() {
  Stopwatch watch;
  const auto matrices = random_matrices(kCertificateSeed, 500, 5, 3, 3, false);
  std::size_t admissible = 0, failures = 0;
  for (const auto& a : matrices) {
    const auto cert = check_admissible(a);
    if (cert.admissible()) ++admissible;
    if (!oracle::certificate_sound(a, cert)) ++failures;
  }
  return finish(5, "certificate soundness (500 random matrices)", 30.0, watch, failures == 0,
                fmt("%zu admissible, %zu inadmissible, %zu failures", admissible, matrices.size() - admissible,
                    failures));
}

CriterionResult cartan_property() {
  Stopwatch watch;
  std::size_t examined = 0, exceptions = 0;
  for (const auto& a : criterion4_matrices()) {
    if (resonance(a).order != 1) continue;
    ++examined;
    if (quasi_resonance(a, a).order != 1) ++exceptions;
  }
  return finish(6, "resonance order 1 implies quasi-resonance order 1", 60.0, watch, exceptions == 0,
                fmt("%zu matrices with order 1, %zu exceptions", examined, exceptions));
}

CriterionResult mc_calibration(const Options& options) {
  Stopwatch watch;
  const auto ball = DomainSpec::unit_ball(2);
  const MultiIndex zero = MultiIndex::zero(2);
  const double oracle_volume = oracle::ball_moment_closed_form(zero);
  const auto one = Polynomial::constant(2, GaussianRational(1));
  const auto volume = mc_inner_product(ball, one, one, options.seed, options.count, options.parallel);
  const double rel = std::abs(volume.value.real() - oracle_volume) / oracle_volume;

  const auto ortho = check_orthogonality(ball, WeightMatrix({{1, 0}, {0, 1}}), 3, options.seed,
                                         options.count, options.parallel);
  const bool ok = rel < 0.01 && ortho.pass();
  return finish(7, "ball in C^2: volume within 1%, off-character pairs within threshold", 120.0, watch, ok,
                fmt("<1,1>=%.6f (oracle %.6f, rel err %.2e); %zu pairs, worst z=%.3f, threshold %.3f",
                    volume.value.real(), oracle_volume, rel, ortho.pairs.size(), ortho.worst_z, ortho.threshold));
}

CriterionResult change_of_variables(const Options& options) {
  Stopwatch watch;
  const auto ball = DomainSpec::unit_ball(2);
  const auto image = DomainSpec::shear_image(ball, 3);
  const auto f = PolyMap::shear(2, 3);
  const auto inverse = PolyMap::shear_inverse(2, 3);
  const auto z1_cubed = Polynomial::monomial(2, MultiIndex({3, 0}), GaussianRational(1));
  const auto w2 = Polynomial::variable(2, 1);
  const auto one = Polynomial::constant(2, GaussianRational(1));

  const auto first = check_change_of_variables(f, inverse, ball, image, z1_cubed, w2, options.seed,
                                               options.count, options.parallel);
  const auto second = check_change_of_variables(f, inverse, ball, image, one, one, options.seed,
                                                options.count, options.parallel);
  const double oracle_norm = oracle::ball_moment_closed_form(MultiIndex({3, 0}));
  const double dev_re = std::abs(first.lhs.value.real() - oracle_norm);
  const double dev_im = std::abs(first.lhs.value.imag());
  const bool oracle_ok = dev_re <= kSigmaThreshold * first.lhs.stderr_re &&
                         dev_im <= kSigmaThreshold * std::max(first.lhs.stderr_im, 1e-300);
  const bool ok = first.pass && second.pass && oracle_ok;
  return finish(8, "change of variables for the k=3 shear, ball to its image", 120.0, watch, ok,
                fmt("(w2,z1^3): lhs=%.6f rhs=%.6f tol=%.2e; (1,1): lhs=%.6f rhs=%.6f tol=%.2e; "
                    "oracle %.6f, |lhs-oracle|=%.2e <= %.2e",
                    first.lhs.value.real(), first.rhs.value.real(), first.tolerance_re, second.lhs.value.real(),
                    second.rhs.value.real(), second.tolerance_re, oracle_norm, dev_re,
                    kSigmaThreshold * first.lhs.stderr_re));
}

std::vector<CriterionResult> run_all(const Options& options,
                                     const std::function<void(const CriterionResult&)>& on_result) {
  std::vector<CriterionResult> out;
  auto record = [&](CriterionResult r) {
    if (on_result) on_result(r);
    out.push_back(std::move(r));
  };
  record(remark_linear_23());
  record(quasi_circular_consistency());
  record(shear_family());
  record(oracle_equivalence());
  record(certificate_soundness());
  record(cartan_property());
  record(mc_calibration(options));
  record(change_of_variables(options));
  return out;
}

std::string format_line(const CriterionResult& r) {
  return fmt("[%s] %d. %s (%.2fs / %.0fs) -- %s", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(), r.seconds,
             r.time_limit, r.detail.c_str());
}

}  // namespace resonax::acceptance
