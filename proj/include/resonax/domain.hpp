#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "resonax/kernels.hpp"
#include "resonax/polymap.hpp"

namespace resonax {

enum class DomainKind { unit_ball, polydisc, weighted_ellipsoid, shear_image };

/// Bounded domain containing the origin, described by a defining value g with D = {g < 1}.
class DomainSpec {
 public:
  static DomainSpec unit_ball(std::size_t n);
  static DomainSpec polydisc(std::vector<double> radii);
  /// sum_i c_i |z_i|^(2 p_i) < 1 with c_i > 0, p_i >= 1.
  static DomainSpec weighted_ellipsoid(std::vector<double> coefficients, std::vector<double> exponents);
  /// Image of `base` under `map`. `inverse` must be its exact two-sided inverse.
  static DomainSpec shear_image(const DomainSpec& base, PolyMap map, PolyMap inverse);
  /// Image of `base` under (z_1, z_2 + z_1^k, ...).
  static DomainSpec shear_image(const DomainSpec& base, std::uint32_t k);

  DomainKind kind() const { return kind_; }
  std::size_t dimension() const { return n_; }

  /// Per-coordinate radii of an enclosing polydisc.
  const std::vector<double>& bounding_radii() const { return radii_; }
  /// Volume of the enclosing polydisc, prod pi r_i^2.
  double enclosing_volume() const;

  double defining_value(std::span<const std::complex<double>> z) const;
  bool contains(std::span<const std::complex<double>> z) const { return defining_value(z) < 1.0; }

  /// Batch defining values through the active kernels.
  void defining_values(const kernels::PointsView& pts, double* out,
                       const kernels::KernelTable& k = kernels::active_kernels()) const;

  const std::vector<double>& radii() const { return params_a_; }
  const std::vector<double>& coefficients() const { return params_a_; }
  const std::vector<double>& exponents() const { return params_b_; }
  const DomainSpec& base() const { return *base_; }
  const PolyMap& map() const { return *map_; }
  const PolyMap& inverse() const { return *inverse_; }

 private:
  DomainSpec(DomainKind kind, std::size_t n) : kind_(kind), n_(n) {}
  void check_contains_origin() const;

  DomainKind kind_;
  std::size_t n_;
  std::vector<double> radii_;
  std::vector<double> params_a_;
  std::vector<double> params_b_;
  std::vector<std::uint32_t> integer_powers_;  // exponents when all integral
  std::shared_ptr<const DomainSpec> base_;
  std::shared_ptr<const PolyMap> map_;
  std::shared_ptr<const PolyMap> inverse_;
  std::vector<kernels::CompiledPolynomial> compiled_inverse_;
};

struct ParallelOptions {
  unsigned workers = 0;  // 0: hardware concurrency
  unsigned resolved() const;
};

/// Accepted points in structure-of-arrays form, in candidate-index order.
struct SampleSet {
  std::vector<std::vector<double>> re;
  std::vector<std::vector<double>> im;
  std::uint64_t candidates = 0;  // candidates consumed to obtain size() acceptances
  double enclosing_volume = 0;
  std::uint64_t seed = 0;

  std::size_t dims() const { return re.size(); }
  std::size_t size() const { return re.empty() ? 0 : re.front().size(); }
  double acceptance_ratio() const {
    return candidates ? static_cast<double>(size()) / static_cast<double>(candidates) : 0.0;
  }
  std::vector<std::complex<double>> point(std::size_t j) const;

  /// View of points [begin, begin + count); `re_ptrs`/`im_ptrs` receive the column pointers.
  kernels::PointsView view(std::size_t begin, std::size_t count, std::vector<const double*>& re_ptrs,
                           std::vector<const double*>& im_ptrs) const;
};

/// Minimum acceptance ratio tolerated before sampling is abandoned.
constexpr double kMinAcceptanceRatio = 1e-6;

/// Uniform points of `spec` by rejection from its enclosing polydisc.
///
/// Candidate j is drawn from Philox keyed by `seed` at counter j, so the accepted stream and
/// the returned set do not depend on the worker count.
SampleSet sample_domain(const DomainSpec& spec, std::uint64_t seed, std::size_t count,
                        const ParallelOptions& parallel = {});

}  // namespace resonax
