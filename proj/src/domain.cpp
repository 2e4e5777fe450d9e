#include "resonax/domain.hpp"

#include <cmath>
#include <numbers>
#include <optional>
#include <string>

#include "parallel.hpp"
#include "resonax/error.hpp"
#include "resonax/philox.hpp"

namespace resonax {

DomainSpec DomainSpec::unit_ball(std::size_t n) {
  if (n == 0) throw InvalidInput("unit ball needs n >= 1");
  DomainSpec d(DomainKind::unit_ball, n);
  d.radii_.assign(n, 1.0);
  d.params_a_.assign(n, 1.0);
  d.integer_powers_.assign(n, 1);
  return d;
}

DomainSpec DomainSpec::polydisc(std::vector<double> radii) {
  if (radii.empty()) throw InvalidInput("polydisc needs at least one radius");
  DomainSpec d(DomainKind::polydisc, radii.size());
  for (double r : radii) {
    if (!(r > 0) || !std::isfinite(r)) throw InvalidInput("polydisc radii must be positive and finite");
    d.params_b_.push_back(1.0 / (r * r));
  }
  d.radii_ = radii;
  d.params_a_ = std::move(radii);
  return d;
}

DomainSpec DomainSpec::weighted_ellipsoid(std::vector<double> coefficients, std::vector<double> exponents) {
  if (coefficients.empty() || coefficients.size() != exponents.size()) {
    throw InvalidInput("ellipsoid needs matching, nonempty coefficient and exponent lists");
  }
  DomainSpec d(DomainKind::weighted_ellipsoid, coefficients.size());
  bool integral = true;
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    const double c = coefficients[i];
    const double p = exponents[i];
    if (!(c > 0) || !std::isfinite(c)) throw InvalidInput("ellipsoid coefficients must be positive");
    if (!(p >= 1) || !std::isfinite(p)) throw InvalidInput("ellipsoid exponents must be >= 1");
    d.radii_.push_back(std::pow(c, -1.0 / (2.0 * p)));
    integral = integral && p == std::floor(p) && p <= 64;
  }
  if (integral) {
    for (double p : exponents) d.integer_powers_.push_back(static_cast<std::uint32_t>(p));
  }
  d.params_a_ = std::move(coefficients);
  d.params_b_ = std::move(exponents);
  return d;
}

DomainSpec DomainSpec::shear_image(const DomainSpec& base, PolyMap map, PolyMap inverse) {
  const std::size_t n = base.dimension();
  for (const PolyMap* f : {&map, &inverse}) {
    if (!f->is_square() || f->size() != n) {
      throw InvalidInput("image map must have " + std::to_string(n) + " components in as many variables");
    }
  }
  const PolyMap id = PolyMap::identity(n);
  if (compose(map, inverse) != id || compose(inverse, map) != id) {
    throw InvalidInput("the supplied inverse is not an exact two-sided inverse of the map");
  }
  DomainSpec d(DomainKind::shear_image, n);
  // |f_i| <= sum |c| prod r_j^alpha_j on the base polydisc.
  for (const auto& p : map.components()) {
    double bound = 0;
    for (const auto& [alpha, c] : p.terms()) {
      double t = std::abs(c.to_complex());
      for (std::size_t j = 0; j < n; ++j) t *= std::pow(base.bounding_radii()[j], alpha[j]);
      bound += t;
    }
    d.radii_.push_back(bound > 0 ? bound : 1.0);
  }
  d.base_ = std::make_shared<const DomainSpec>(base);
  d.map_ = std::make_shared<const PolyMap>(std::move(map));
  d.inverse_ = std::make_shared<const PolyMap>(std::move(inverse));
  for (const auto& p : d.inverse_->components()) d.compiled_inverse_.push_back(kernels::compile(p));
  d.check_contains_origin();
  return d;
}

DomainSpec DomainSpec::shear_image(const DomainSpec& base, std::uint32_t k) {
  return shear_image(base, PolyMap::shear(base.dimension(), k), PolyMap::shear_inverse(base.dimension(), k));
}

double DomainSpec::enclosing_volume() const {
  double v = 1.0;
  for (double r : radii_) v *= std::numbers::pi * r * r;
  return v;
}

void DomainSpec::check_contains_origin() const {
  const std::vector<std::complex<double>> origin(n_);
  if (!contains(origin)) throw InvalidInput("domain does not contain the origin");
}

double DomainSpec::defining_value(std::span<const std::complex<double>> z) const {
  if (z.size() != n_) throw InvalidInput("point has the wrong dimension");
  std::vector<double> re(n_), im(n_);
  std::vector<const double*> re_ptr(n_), im_ptr(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    re[i] = z[i].real();
    im[i] = z[i].imag();
    re_ptr[i] = &re[i];
    im_ptr[i] = &im[i];
  }
  double out = 0;
  defining_values({re_ptr, im_ptr, 1}, &out, kernels::scalar_kernels());
  return out;
}

void DomainSpec::defining_values(const kernels::PointsView& pts, double* out,
                                 const kernels::KernelTable& k) const {
  switch (kind_) {
    case DomainKind::unit_ball:
      k.power_sum(params_a_, integer_powers_, pts, out);
      return;
    case DomainKind::polydisc:
      k.max_scaled_norm(params_b_, pts, out);
      return;
    case DomainKind::weighted_ellipsoid:
      if (!integer_powers_.empty()) {
        k.power_sum(params_a_, integer_powers_, pts, out);
        return;
      }
      for (std::size_t j = 0; j < pts.count; ++j) {
        double acc = 0.0;
        for (std::size_t i = 0; i < n_; ++i) {
          const double m = pts.re[i][j] * pts.re[i][j] + pts.im[i][j] * pts.im[i][j];
          acc = acc + params_a_[i] * std::pow(m, params_b_[i]);
        }
        out[j] = acc;
      }
      return;
    case DomainKind::shear_image: {
      std::vector<std::vector<double>> re(n_, std::vector<double>(pts.count));
      std::vector<std::vector<double>> im(n_, std::vector<double>(pts.count));
      std::vector<const double*> re_ptr, im_ptr;
      for (std::size_t i = 0; i < n_; ++i) {
        k.eval_poly(compiled_inverse_[i], pts, re[i].data(), im[i].data());
        re_ptr.push_back(re[i].data());
        im_ptr.push_back(im[i].data());
      }
      base_->defining_values({re_ptr, im_ptr, pts.count}, out, k);
      return;
    }
  }
}

unsigned ParallelOptions::resolved() const {
  if (workers > 0) return workers;
  return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<std::complex<double>> SampleSet::point(std::size_t j) const {
  std::vector<std::complex<double>> z;
  for (std::size_t i = 0; i < dims(); ++i) z.emplace_back(re[i][j], im[i][j]);
  return z;
}

kernels::PointsView SampleSet::view(std::size_t begin, std::size_t count, std::vector<const double*>& re_ptrs,
                                    std::vector<const double*>& im_ptrs) const {
  re_ptrs.clear();
  im_ptrs.clear();
  for (std::size_t i = 0; i < dims(); ++i) {
    re_ptrs.push_back(re[i].data() + begin);
    im_ptrs.push_back(im[i].data() + begin);
  }
  return {re_ptrs, im_ptrs, count};
}

namespace {

constexpr std::size_t kChunk = 8192;
constexpr std::uint64_t kMinCandidatesBeforeAbort = std::uint64_t{1} << 24;

struct ChunkResult {
  std::vector<std::vector<double>> re;
  std::vector<std::vector<double>> im;
  std::vector<std::uint32_t> offsets;  // position of each accepted point inside the chunk
};

ChunkResult draw_chunk(const DomainSpec& spec, const Philox4x32& rng, std::uint64_t chunk) {
  const std::size_t n = spec.dimension();
  const auto& radii = spec.bounding_radii();
  std::vector<std::vector<double>> re(n, std::vector<double>(kChunk));
  std::vector<std::vector<double>> im(n, std::vector<double>(kChunk));
  for (std::size_t t = 0; t < kChunk; ++t) {
    const std::uint64_t index = chunk * kChunk + t;
    for (std::size_t i = 0; i < n; ++i) {
      const auto [u, v] = rng.uniform2(index, static_cast<std::uint32_t>(i), 0);
      const double rad = radii[i] * std::sqrt(u);
      const double ang = 2.0 * std::numbers::pi * v;
      re[i][t] = rad * std::cos(ang);
      im[i][t] = rad * std::sin(ang);
    }
  }
  std::vector<const double*> re_ptr, im_ptr;
  for (std::size_t i = 0; i < n; ++i) {
    re_ptr.push_back(re[i].data());
    im_ptr.push_back(im[i].data());
  }
  std::vector<double> value(kChunk);
  spec.defining_values({re_ptr, im_ptr, kChunk}, value.data());

  ChunkResult out;
  out.re.resize(n);
  out.im.resize(n);
  for (std::size_t t = 0; t < kChunk; ++t) {
    if (!(value[t] < 1.0)) continue;
    out.offsets.push_back(static_cast<std::uint32_t>(t));
    for (std::size_t i = 0; i < n; ++i) {
      out.re[i].push_back(re[i][t]);
      out.im[i].push_back(im[i][t]);
    }
  }
  return out;
}

// Volume fraction of the enclosing polydisc, where a closed form exists.
std::optional<double> exact_acceptance_ratio(const DomainSpec& spec) {
  switch (spec.kind()) {
    case DomainKind::polydisc:
      return 1.0;
    case DomainKind::unit_ball:
      return std::exp(-std::lgamma(static_cast<double>(spec.dimension()) + 1.0));
    case DomainKind::weighted_ellipsoid: {
      double log_ratio = 0;
      double total = 0;
      for (double p : spec.exponents()) {
        log_ratio += std::lgamma(1.0 + 1.0 / p);
        total += 1.0 / p;
      }
      return std::exp(log_ratio - std::lgamma(1.0 + total));
    }
    default:
      return std::nullopt;
  }
}

[[noreturn]] void degenerate(double ratio, const std::string& how) {
  throw DegenerateDomainError("acceptance ratio " + std::to_string(ratio) + " below " +
                              std::to_string(kMinAcceptanceRatio) + " " + how);
}

}  // namespace

SampleSet sample_domain(const DomainSpec& spec, std::uint64_t seed, std::size_t count,
                        const ParallelOptions& parallel) {
  const std::size_t n = spec.dimension();
  if (const auto ratio = exact_acceptance_ratio(spec); ratio && *ratio < kMinAcceptanceRatio) {
    degenerate(*ratio, "(exact volume fraction)");
  }
  const Philox4x32 rng(seed);
  SampleSet set;
  set.seed = seed;
  set.enclosing_volume = spec.enclosing_volume();
  set.re.assign(n, {});
  set.im.assign(n, {});
  for (std::size_t i = 0; i < n; ++i) {
    set.re[i].reserve(count);
    set.im[i].reserve(count);
  }
  const unsigned workers = parallel.resolved();
  std::uint64_t next_chunk = 0;
  std::size_t accepted = 0;
  while (accepted < count) {
    std::vector<ChunkResult> round(workers);
    detail::parallel_for(workers, workers,
                         [&](std::size_t w) { round[w] = draw_chunk(spec, rng, next_chunk + w); });
    for (std::size_t w = 0; w < workers && accepted < count; ++w) {
      const ChunkResult& c = round[w];
      const std::size_t take = std::min(c.offsets.size(), count - accepted);
      for (std::size_t i = 0; i < n; ++i) {
        set.re[i].insert(set.re[i].end(), c.re[i].begin(), c.re[i].begin() + static_cast<long>(take));
        set.im[i].insert(set.im[i].end(), c.im[i].begin(), c.im[i].begin() + static_cast<long>(take));
      }
      accepted += take;
      set.candidates = accepted == count && take > 0
                           ? (next_chunk + w) * kChunk + c.offsets[take - 1] + 1
                           : (next_chunk + w + 1) * kChunk;
    }
    next_chunk += workers;
    if (accepted < count && set.candidates >= kMinCandidatesBeforeAbort &&
        static_cast<double>(accepted) < kMinAcceptanceRatio * static_cast<double>(set.candidates)) {
      degenerate(static_cast<double>(accepted) / static_cast<double>(set.candidates),
                 "after " + std::to_string(set.candidates) + " candidates");
    }
  }
  return set;
}

}  // namespace resonax
