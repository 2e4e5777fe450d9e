#include "resonax/mc.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "parallel.hpp"
#include "resonax/error.hpp"
#include "resonax/philox.hpp"

namespace resonax {
namespace {

constexpr std::size_t kEvalChunk = 4096;

struct Moments {
  double re = 0, im = 0, re2 = 0, im2 = 0;

  Moments& operator+=(const Moments& o) {
    re += o.re;
    im += o.im;
    re2 += o.re2;
    im2 += o.im2;
    return *this;
  }
};

// Pairwise reduction in fixed index order.
Moments reduce(const std::vector<Moments>& parts, std::size_t begin, std::size_t end) {
  if (end - begin == 0) return {};
  if (end - begin == 1) return parts[begin];
  const std::size_t mid = begin + (end - begin) / 2;
  Moments left = reduce(parts, begin, mid);
  left += reduce(parts, mid, end);
  return left;
}

MCEstimate finish(const Moments& m, const SampleSet& samples) {
  MCEstimate e;
  e.samples = samples.size();
  e.candidates = samples.candidates;
  e.seed = samples.seed;
  const double n = static_cast<double>(samples.candidates);
  if (samples.candidates == 0) return e;
  const double vol = samples.enclosing_volume;
  const double mean_re = m.re / n;
  const double mean_im = m.im / n;
  e.value = {vol * mean_re, vol * mean_im};
  if (samples.candidates > 1) {
    const double var_re = std::max(0.0, m.re2 / n - mean_re * mean_re);
    const double var_im = std::max(0.0, m.im2 / n - mean_im * mean_im);
    e.stderr_re = vol * std::sqrt(var_re / (n - 1.0));
    e.stderr_im = vol * std::sqrt(var_im / (n - 1.0));
  }
  return e;
}

double component_z(double value, double se) {
  if (value == 0.0) return 0.0;
  if (se == 0.0) return std::numeric_limits<double>::infinity();
  return std::abs(value) / se;
}

std::vector<MultiIndex> monomials_up_to(std::size_t n, std::uint32_t max_degree) {
  std::vector<MultiIndex> out;
  MultiIndex alpha = MultiIndex::zero(n);
  auto visit = [&](auto&& self, std::size_t i, std::uint32_t left) -> void {
    if (i == n) {
      out.push_back(alpha);
      return;
    }
    for (std::uint32_t e = 0; e <= left; ++e) {
      alpha[i] = e;
      self(self, i + 1, left - e);
    }
    alpha[i] = 0;
  };
  visit(visit, 0, max_degree);
  std::sort(out.begin(), out.end(), GrlexLess{});
  return out;
}

}  // namespace

std::vector<MCEstimate> estimate_inner_products(const SampleSet& samples,
                                                std::span<const Polynomial> polys,
                                                std::span<const std::pair<std::size_t, std::size_t>> pairs,
                                                const ParallelOptions& parallel) {
  std::vector<kernels::CompiledPolynomial> compiled;
  for (const auto& p : polys) {
    if (p.variables() != samples.dims()) {
      throw InvalidInput("integrand has " + std::to_string(p.variables()) + " variables, domain has " +
                         std::to_string(samples.dims()));
    }
    compiled.push_back(kernels::compile(p));
  }
  for (const auto& [a, b] : pairs) {
    if (a >= polys.size() || b >= polys.size()) throw InvalidInput("pair index out of range");
  }

  const std::size_t total = samples.size();
  const std::size_t chunks = (total + kEvalChunk - 1) / kEvalChunk;
  std::vector<std::vector<Moments>> per_chunk(pairs.size(), std::vector<Moments>(chunks));
  const auto& k = kernels::active_kernels();

  detail::parallel_for(chunks, parallel.resolved(), [&](std::size_t c) {
    const std::size_t begin = c * kEvalChunk;
    const std::size_t len = std::min(kEvalChunk, total - begin);
    std::vector<const double*> re_ptr, im_ptr;
    const kernels::PointsView view = samples.view(begin, len, re_ptr, im_ptr);
    std::vector<std::vector<double>> vre(compiled.size(), std::vector<double>(len));
    std::vector<std::vector<double>> vim(compiled.size(), std::vector<double>(len));
    for (std::size_t p = 0; p < compiled.size(); ++p) k.eval_poly(compiled[p], view, vre[p].data(), vim[p].data());
    std::vector<double> pre(len), pim(len);
    for (std::size_t q = 0; q < pairs.size(); ++q) {
      const auto [a, b] = pairs[q];
      k.mul_conj(vre[a].data(), vim[a].data(), vre[b].data(), vim[b].data(), len, pre.data(), pim.data());
      Moments m;
      for (std::size_t j = 0; j < len; ++j) {
        m.re += pre[j];
        m.im += pim[j];
        m.re2 += pre[j] * pre[j];
        m.im2 += pim[j] * pim[j];
      }
      per_chunk[q][c] = m;
    }
  });

  std::vector<MCEstimate> out;
  for (std::size_t q = 0; q < pairs.size(); ++q) out.push_back(finish(reduce(per_chunk[q], 0, chunks), samples));
  return out;
}

MCEstimate mc_inner_product(const DomainSpec& spec, const Polynomial& p, const Polynomial& q,
                            std::uint64_t seed, std::size_t count, const ParallelOptions& parallel) {
  const SampleSet samples = sample_domain(spec, seed, count, parallel);
  const std::vector<Polynomial> polys{p, q};
  const std::pair<std::size_t, std::size_t> pair{0, 1};
  return estimate_inner_products(samples, polys, std::span(&pair, 1), parallel).front();
}

double family_error_bound(std::size_t tests, double z) {
  return std::min(1.0, static_cast<double>(tests) * std::erfc(z / std::numbers::sqrt2));
}

double z_threshold(std::size_t tests) {
  if (tests == 0) return kSigmaThreshold;
  // Solve tests * P(|Z| > z) = budget by bisection; the tail is monotone in z.
  double lo = 0.0, hi = 40.0;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (static_cast<double>(tests) * std::erfc(mid / std::numbers::sqrt2) > kFamilyErrorBudget) lo = mid;
    else hi = mid;
  }
  return std::max(kSigmaThreshold, hi);
}

bool OrthogonalityReport::pass() const {
  return std::all_of(pairs.begin(), pairs.end(), [](const auto& p) { return p.pass; });
}

OrthogonalityReport check_orthogonality(const DomainSpec& spec, const WeightMatrix& a,
                                        std::uint32_t max_degree, std::uint64_t seed, std::size_t count,
                                        const ParallelOptions& parallel) {
  const std::size_t n = spec.dimension();
  if (a.n() != n) throw InvalidInput("weight matrix and domain disagree on n");

  const std::vector<MultiIndex> monos = monomials_up_to(n, max_degree);
  std::vector<Polynomial> polys;
  std::vector<Character> chars;
  for (const auto& m : monos) {
    polys.push_back(Polynomial::monomial(n, m));
    chars.push_back(a.character_of(m));
  }
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < monos.size(); ++i)
    for (std::size_t j = i + 1; j < monos.size(); ++j)
      if (chars[i] != chars[j]) pairs.emplace_back(i, j);

  const SampleSet samples = sample_domain(spec, seed, count, parallel);
  const auto estimates = estimate_inner_products(samples, polys, pairs, parallel);

  OrthogonalityReport report;
  report.tests = 2 * pairs.size();
  report.threshold = z_threshold(report.tests);
  report.family_error = family_error_bound(report.tests, report.threshold);
  report.seed = seed;
  report.samples = samples.size();
  report.acceptance_ratio = samples.acceptance_ratio();
  for (std::size_t q = 0; q < pairs.size(); ++q) {
    const auto [i, j] = pairs[q];
    OrthogonalityPair p{monos[i], monos[j], chars[i], chars[j], estimates[q], 0, false};
    p.z = std::max(component_z(p.estimate.value.real(), p.estimate.stderr_re),
                   component_z(p.estimate.value.imag(), p.estimate.stderr_im));
    p.pass = p.z <= report.threshold;
    report.worst_z = std::max(report.worst_z, p.z);
    report.pairs.push_back(std::move(p));
  }
  return report;
}

ChangeOfVariablesReport check_change_of_variables(const PolyMap& f, const PolyMap& inverse,
                                                  const DomainSpec& source, const DomainSpec& target,
                                                  const Polynomial& phi, const Polynomial& psi,
                                                  std::uint64_t seed, std::size_t count,
                                                  const ParallelOptions& parallel) {
  const std::size_t n = source.dimension();
  if (target.dimension() != n) throw InvalidInput("source and target domains differ in dimension");
  for (const PolyMap* m : {&f, &inverse}) {
    if (!m->is_square() || m->size() != n) throw InvalidInput("maps must be square of size n");
  }
  if (phi.variables() != n || psi.variables() != n) throw InvalidInput("test functions must have n variables");
  const PolyMap id = PolyMap::identity(n);
  if (compose(f, inverse) != id || compose(inverse, f) != id) {
    throw InvalidInput("no exact inverse: F o f and f o F must both be the identity");
  }

  ChangeOfVariablesReport report;
  report.source_jacobian = jacobian_det(f);
  report.target_jacobian = jacobian_det(inverse);
  const Polynomial lhs_left = report.source_jacobian * compose(psi, f);
  const Polynomial rhs_right = report.target_jacobian * compose(phi, inverse);

  report.lhs = mc_inner_product(source, lhs_left, phi, seed, count, parallel);
  report.rhs = mc_inner_product(target, psi, rhs_right, seed, count, parallel);
  report.tolerance_re = kSigmaThreshold * (report.lhs.stderr_re + report.rhs.stderr_re);
  report.tolerance_im = kSigmaThreshold * (report.lhs.stderr_im + report.rhs.stderr_im);
  const std::complex<double> diff = report.lhs.value - report.rhs.value;
  report.pass = std::abs(diff.real()) <= report.tolerance_re && std::abs(diff.imag()) <= report.tolerance_im;
  return report;
}

InvarianceReport check_invariance(const DomainSpec& spec, const WeightMatrix& a, std::uint64_t seed,
                                  std::size_t count, const ParallelOptions& parallel) {
  const std::size_t n = spec.dimension();
  const std::size_t r = a.r();
  if (a.n() != n) throw InvalidInput("weight matrix and domain disagree on n");

  const SampleSet samples = sample_domain(spec, seed, count, parallel);
  const Philox4x32 rng(seed);
  const std::size_t total = samples.size();
  const std::size_t chunks = (total + kEvalChunk - 1) / kEvalChunk;

  struct ChunkResult {
    std::uint64_t violations = 0;
    double max_value = 0;
    std::optional<InvarianceViolation> first;
  };
  std::vector<ChunkResult> results(chunks);

  auto angles_of = [&](std::size_t index) {
    std::vector<double> theta(r);
    for (std::size_t l = 0; l < r; l += 2) {
      const auto u = rng.uniform2(index, static_cast<std::uint32_t>(l / 2), 1);
      theta[l] = 2.0 * std::numbers::pi * u[0];
      if (l + 1 < r) theta[l + 1] = 2.0 * std::numbers::pi * u[1];
    }
    return theta;
  };

  detail::parallel_for(chunks, parallel.resolved(), [&](std::size_t c) {
    const std::size_t begin = c * kEvalChunk;
    const std::size_t len = std::min(kEvalChunk, total - begin);
    std::vector<std::vector<double>> re(n, std::vector<double>(len)), im(n, std::vector<double>(len));
    for (std::size_t t = 0; t < len; ++t) {
      const std::vector<double> theta = angles_of(begin + t);
      for (std::size_t i = 0; i < n; ++i) {
        double phase = 0;
        for (std::size_t l = 0; l < r; ++l) phase += static_cast<double>(a(i, l)) * theta[l];
        const std::complex<double> w =
            std::complex<double>(samples.re[i][begin + t], samples.im[i][begin + t]) * std::polar(1.0, phase);
        re[i][t] = w.real();
        im[i][t] = w.imag();
      }
    }
    std::vector<const double*> re_ptr, im_ptr;
    for (std::size_t i = 0; i < n; ++i) {
      re_ptr.push_back(re[i].data());
      im_ptr.push_back(im[i].data());
    }
    std::vector<double> value(len);
    spec.defining_values({re_ptr, im_ptr, len}, value.data());
    ChunkResult& res = results[c];
    for (std::size_t t = 0; t < len; ++t) {
      res.max_value = std::max(res.max_value, value[t]);
      if (value[t] < 1.0 + kInvarianceSlack) continue;
      ++res.violations;
      if (!res.first) {
        InvarianceViolation v;
        v.point = samples.point(begin + t);
        v.angles = angles_of(begin + t);
        for (std::size_t i = 0; i < n; ++i) v.image.emplace_back(re[i][t], im[i][t]);
        v.value = value[t];
        res.first = std::move(v);
      }
    }
  });

  InvarianceReport report;
  report.checked = total;
  report.seed = seed;
  for (auto& res : results) {
    report.violations += res.violations;
    report.max_value = std::max(report.max_value, res.max_value);
    if (!report.witness && res.first) report.witness = std::move(res.first);
  }
  return report;
}

}  // namespace resonax
