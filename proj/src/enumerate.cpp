#include "resonax/enumerate.hpp"

#include <algorithm>
#include <limits>
#include <type_traits>

#include "resonax/admissibility.hpp"
#include "resonax/error.hpp"

namespace resonax {
namespace {

std::vector<BigInt> integer_direction(const std::vector<Rational>& lambda) {
  BigInt lcm = 1;
  for (const auto& x : lambda) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den_mpz_t());
  std::vector<BigInt> out;
  BigInt g = 0;
  for (const auto& x : lambda) {
    out.push_back(x.get_num() * (lcm / x.get_den()));
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out.back().get_mpz_t());
  }
  if (sgn(g) > 0) {
    for (auto& v : out) v /= g;
  }
  return out;
}

BigInt dot(std::span<const std::int64_t> row, const std::vector<BigInt>& l) {
  BigInt s = 0;
  for (std::size_t j = 0; j < row.size(); ++j) s += from_int64(row[j]) * l[j];
  return s;
}

BigInt dot(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
  BigInt s = 0;
  for (std::size_t j = 0; j < a.size(); ++j) s += a[j] * b[j];
  return s;
}

const BigInt& machine_limit() {
  static const BigInt limit = BigInt(1) << 62;
  return limit;
}

template <typename Int>
struct Dfs {
  std::size_t n = 0;
  std::size_t r = 0;
  std::vector<std::vector<Int>> rows;         // a_i
  std::vector<std::vector<Int>> functionals;  // L_s
  std::vector<std::vector<Int>> weights;      // weights[s][i] = a_i . L_s, i >= s
  std::vector<Int> caps;
  MultiIndex current;
  std::vector<MultiIndex> out;

  void solve(std::size_t s, const std::vector<Int>& residual) {
    if (s + 1 == n) {
      solve_last(residual);
      return;
    }
    Int t = 0;
    for (std::size_t j = 0; j < r; ++j) t += residual[j] * functionals[s][j];
    if (t < 0) return;
    Int top = t / weights[s][s];
    if (caps[s] < top) top = caps[s];
    std::vector<Int> next = residual;
    for (Int alpha = 0;; ++alpha) {
      current[s] = static_cast<std::uint32_t>(to_u64(alpha));
      solve(s + 1, next);
      if (!(alpha < top)) break;
      for (std::size_t j = 0; j < r; ++j) next[j] -= rows[s][j];
    }
    current[s] = 0;
  }

  void solve_last(const std::vector<Int>& residual) {
    const auto& a = rows[n - 1];
    std::size_t pivot = r;
    for (std::size_t j = 0; j < r; ++j) {
      if (a[j] != 0) {
        pivot = j;
        break;
      }
    }
    if (pivot == r) return;  // unreachable for admissible matrices
    if (residual[pivot] % a[pivot] != 0) return;
    const Int alpha = residual[pivot] / a[pivot];
    if (alpha < 0 || caps[n - 1] < alpha) return;
    for (std::size_t j = 0; j < r; ++j) {
      if (residual[j] != alpha * a[j]) return;
    }
    current[n - 1] = static_cast<std::uint32_t>(to_u64(alpha));
    out.push_back(current);
    current[n - 1] = 0;
  }

  static std::uint64_t to_u64(const Int& v) {
    if constexpr (std::is_same_v<Int, BigInt>) {
      return v.get_ui();
    } else {
      return static_cast<std::uint64_t>(v);
    }
  }
};

template <typename Int, typename Convert>
Dfs<Int> make_dfs(const WeightMatrix& a, const std::vector<std::vector<BigInt>>& functionals,
                  const std::vector<std::vector<BigInt>>& weights, const std::vector<BigInt>& caps,
                  Convert convert) {
  Dfs<Int> dfs;
  dfs.n = a.n();
  dfs.r = a.r();
  for (std::size_t i = 0; i < a.n(); ++i) {
    std::vector<Int> row;
    for (auto v : a.row(i)) row.push_back(convert(from_int64(v)));
    dfs.rows.push_back(std::move(row));
  }
  for (const auto& l : functionals) {
    std::vector<Int> row;
    for (const auto& v : l) row.push_back(convert(v));
    dfs.functionals.push_back(std::move(row));
  }
  for (const auto& w : weights) {
    std::vector<Int> row;
    for (const auto& v : w) row.push_back(convert(v));
    dfs.weights.push_back(std::move(row));
  }
  for (const auto& c : caps) dfs.caps.push_back(convert(c));
  dfs.current = MultiIndex::zero(a.n());
  return dfs;
}

}  // namespace

WeightSpaceEnumerator::WeightSpaceEnumerator(WeightMatrix a) : a_(std::move(a)) {
  const std::size_t n = a_.n();
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<std::size_t> suffix;
    for (std::size_t i = s; i < n; ++i) suffix.push_back(i);
    // Rows of an admissible matrix stay admissible in any subset, so only s = 0 can throw.
    std::vector<BigInt> l = integer_direction(positive_functional(a_.select_rows(suffix)));
    std::vector<BigInt> w(n, BigInt(0));
    for (std::size_t i = s; i < n; ++i) {
      w[i] = dot(a_.row(i), l);
      if (sgn(w[i]) <= 0) throw std::logic_error("suffix functional is not positive");
    }
    suffix_functionals_.push_back(std::move(l));
    suffix_weights_.push_back(std::move(w));
  }
}

bool WeightSpaceEnumerator::machine_range_ok(const Character& k, std::vector<BigInt>& caps) const {
  const std::size_t n = a_.n();
  const std::size_t r = a_.r();
  const BigInt& limit = machine_limit();
  std::vector<BigInt> residual_bound(r);
  for (std::size_t j = 0; j < r; ++j) {
    residual_bound[j] = abs(k[j]);
    for (std::size_t i = 0; i < n; ++i) residual_bound[j] += caps[i] * abs(from_int64(a_(i, j)));
    if (residual_bound[j] >= limit) return false;
  }
  for (std::size_t s = 0; s < n; ++s) {
    BigInt t = 0;
    for (std::size_t j = 0; j < r; ++j) t += residual_bound[j] * abs(suffix_functionals_[s][j]);
    if (t >= limit) return false;
    for (const auto& w : suffix_weights_[s])
      if (w >= limit) return false;
  }
  return true;
}

std::vector<MultiIndex> WeightSpaceEnumerator::run_exact(const Character& k,
                                                         const std::vector<BigInt>& caps) const {
  auto dfs = make_dfs<BigInt>(a_, suffix_functionals_, suffix_weights_, caps,
                              [](const BigInt& v) { return v; });
  dfs.solve(0, k);
  return std::move(dfs.out);
}

std::vector<MultiIndex> WeightSpaceEnumerator::run_machine(const Character& k,
                                                           const std::vector<BigInt>& caps) const {
  auto dfs = make_dfs<std::int64_t>(a_, suffix_functionals_, suffix_weights_, caps,
                                    [](const BigInt& v) { return to_int64(v); });
  std::vector<std::int64_t> residual;
  for (const auto& v : k) residual.push_back(to_int64(v));
  dfs.solve(0, residual);
  return std::move(dfs.out);
}

std::optional<WeightSpace> WeightSpaceEnumerator::enumerate(const Character& k,
                                                            EnumerationKernel kernel) const {
  if (k.size() != a_.r()) {
    throw InvalidInput("character has " + std::to_string(k.size()) + " components, expected r=" +
                       std::to_string(a_.r()));
  }
  const BigInt t = dot(k, functional());
  if (sgn(t) < 0) return std::nullopt;

  // Every solution satisfies alpha_i (a_i . L_0) <= k . L_0.
  std::vector<BigInt> caps;
  for (std::size_t i = 0; i < a_.n(); ++i) {
    caps.push_back(floor_div(t, suffix_weights_[0][i]));
    if (caps.back() > std::numeric_limits<std::uint32_t>::max()) {
      throw OverflowError("exponent bound " + caps.back().get_str() + " for z_" + std::to_string(i) +
                          " exceeds the 32-bit exponent range");
    }
  }

  std::vector<MultiIndex> basis;
  switch (kernel) {
    case EnumerationKernel::exact:
      basis = run_exact(k, caps);
      break;
    case EnumerationKernel::machine:
      if (!machine_range_ok(k, caps)) throw OverflowError("character outside the int64 kernel range");
      basis = run_machine(k, caps);
      break;
    case EnumerationKernel::automatic:
      basis = machine_range_ok(k, caps) ? run_machine(k, caps) : run_exact(k, caps);
      break;
  }
  if (basis.empty()) return std::nullopt;

  WeightSpace space;
  space.character = k;
  space.min_degree = std::numeric_limits<std::uint64_t>::max();
  for (const auto& alpha : basis) {
    space.min_degree = std::min(space.min_degree, alpha.degree());
    space.max_degree = std::max(space.max_degree, alpha.degree());
  }
  space.basis = std::move(basis);
  return space;
}

std::optional<WeightSpace> enumerate_weight_space(const WeightMatrix& a, const Character& k) {
  return WeightSpaceEnumerator(a).enumerate(k);
}

std::optional<std::pair<std::uint64_t, std::uint64_t>> degree_extremes(const WeightMatrix& a,
                                                                       const Character& k) {
  auto space = enumerate_weight_space(a, k);
  if (!space) return std::nullopt;
  return std::pair{space->min_degree, space->max_degree};
}

}  // namespace resonax
