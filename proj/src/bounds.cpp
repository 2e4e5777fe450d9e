#include "resonax/bounds.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "resonax/error.hpp"
#include "resonax/resonance.hpp"

namespace resonax {
namespace {

template <typename Key>
std::vector<std::size_t> stable_order(const std::vector<Key>& keys) {
  std::vector<std::size_t> perm(keys.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::stable_sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });
  return perm;
}

void require_positive(std::span<const std::int64_t> w, const char* side) {
  if (w.empty()) throw InvalidInput(std::string(side) + " weights are empty");
  for (auto v : w) {
    if (v <= 0) throw InvalidInput(std::string(side) + " weights must be strictly positive");
  }
}

}  // namespace

QuasiCircularBound quasi_circular_bound(std::span<const std::int64_t> source_weights,
                                        std::span<const std::int64_t> target_weights) {
  require_positive(source_weights, "source");
  require_positive(target_weights, "target");
  if (source_weights.size() != target_weights.size()) {
    throw InvalidInput("source and target weights have different lengths");
  }
  const std::vector<std::int64_t> m(source_weights.begin(), source_weights.end());
  const std::vector<std::int64_t> mp(target_weights.begin(), target_weights.end());

  QuasiCircularBound out;
  out.source_permutation = stable_order(m);
  out.target_permutation = stable_order(mp);
  const BigInt m1 = from_int64(m[out.source_permutation.front()]);
  const BigInt mn = from_int64(m[out.source_permutation.back()]);
  const BigInt mp1 = from_int64(mp[out.target_permutation.front()]);
  const BigInt mpn = from_int64(mp[out.target_permutation.back()]);
  out.coarse = Rational(mn * mpn, m1 * mp1);
  out.coarse.canonicalize();
  out.coarse_degree = floor_div(out.coarse.get_num(), out.coarse.get_den());

  out.exact = quasi_resonance(WeightMatrix::column(m), WeightMatrix::column(mp)).order;
  if (Rational(static_cast<unsigned long>(out.exact)) > out.coarse) {
    throw std::logic_error("exact quasi-resonance order exceeds the rank-one coarse bound");
  }
  return out;
}

NonnegWeightBound nonneg_weight_bound(const WeightMatrix& a) {
  NonnegWeightBound out;
  for (std::size_t i = 0; i < a.n(); ++i) {
    BigInt sum = 0;
    for (auto v : a.row(i)) {
      if (v < 0) throw InvalidInput("negative weight in row " + std::to_string(i));
      sum += from_int64(v);
    }
    if (sgn(sum) == 0) throw InvalidInput("row " + std::to_string(i) + " is zero");
    out.row_sums.push_back(sum);
  }
  out.permutation = stable_order(out.row_sums);
  const BigInt& smallest = out.row_sums[out.permutation.front()];
  const BigInt& largest = out.row_sums[out.permutation.back()];
  const BigInt denom = smallest * smallest;
  for (const auto& s : out.row_sums) {
    Rational b(s * largest, denom);
    b.canonicalize();
    out.bounds.push_back(b);
  }
  out.global_bound = Rational(largest * largest, denom);
  out.global_bound.canonicalize();

  const auto q = quasi_resonance(a, a);
  out.exact = q.orders;
  out.exact_global = q.order;
  for (std::size_t i = 0; i < a.n(); ++i) {
    if (Rational(static_cast<unsigned long>(out.exact[i])) > out.bounds[i]) {
      throw std::logic_error("exact nu_" + std::to_string(i) + " exceeds the nonnegative-weight bound");
    }
  }
  return out;
}

}  // namespace resonax
