#include "resonax/verify/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <set>
#include <stdexcept>

namespace resonax::oracle {
namespace {

std::int64_t dot(std::span<const std::int64_t> a, std::span<const std::int64_t> b) {
  std::int64_t s = 0;
  for (std::size_t j = 0; j < a.size(); ++j) s += a[j] * b[j];
  return s;
}

int grid_radius(std::size_t r) {
  switch (r) {
    case 1: return 1;
    case 2: return 40;
    case 3: return 10;
    default: return 3;
  }
}

}  // namespace

std::vector<std::vector<std::int64_t>> grid_functionals(const WeightMatrix& a) {
  const std::size_t r = a.r();
  const int radius = grid_radius(r);
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> lambda(r, -radius);
  while (true) {
    bool ok = true;
    for (std::size_t i = 0; i < a.n() && ok; ++i) ok = dot(a.row(i), lambda) >= 1;
    if (ok) out.push_back(lambda);
    std::size_t j = 0;
    while (j < r && lambda[j] == radius) lambda[j++] = -radius;
    if (j == r) break;
    ++lambda[j];
  }
  return out;
}

std::vector<MultiIndex> box_scan_weight_space(const WeightMatrix& a, std::span<const std::int64_t> k) {
  const std::size_t n = a.n();
  const std::size_t r = a.r();
  const auto functionals = grid_functionals(a);
  if (functionals.empty()) throw std::invalid_argument("grid search found no positive functional");

  std::vector<std::int64_t> box(n, std::numeric_limits<std::int64_t>::max());
  for (const auto& lambda : functionals) {
    const std::int64_t t = dot(k, lambda);
    if (t < 0) return {};
    for (std::size_t i = 0; i < n; ++i) box[i] = std::min(box[i], t / dot(a.row(i), lambda));
  }

  std::vector<MultiIndex> out;
  std::vector<std::int64_t> alpha(n, 0);
  while (true) {
    bool match = true;
    for (std::size_t j = 0; j < r && match; ++j) {
      std::int64_t s = 0;
      for (std::size_t i = 0; i < n; ++i) s += alpha[i] * a(i, j);
      match = s == k[j];
    }
    if (match) {
      MultiIndex m = MultiIndex::zero(n);
      for (std::size_t i = 0; i < n; ++i) m[i] = static_cast<std::uint32_t>(alpha[i]);
      out.push_back(std::move(m));
    }
    // Odometer with the last coordinate fastest: lexicographic order.
    std::size_t i = n;
    while (i > 0 && alpha[i - 1] == box[i - 1]) alpha[--i] = 0;
    if (i == 0) break;
    ++alpha[i - 1];
  }
  return out;
}

std::optional<MultiIndex> invariant_monomial(const WeightMatrix& a, std::uint32_t max_degree) {
  const std::size_t n = a.n();
  for (std::uint32_t d = 1; d <= max_degree; ++d) {
    std::vector<std::uint32_t> alpha(n, 0);
    std::optional<MultiIndex> found;
    auto visit = [&](auto&& self, std::size_t i, std::uint32_t left) -> void {
      if (found) return;
      if (i + 1 == n) {
        alpha[i] = left;
        bool zero = true;
        for (std::size_t j = 0; j < a.r() && zero; ++j) {
          std::int64_t s = 0;
          for (std::size_t m = 0; m < n; ++m) s += static_cast<std::int64_t>(alpha[m]) * a(m, j);
          zero = s == 0;
        }
        if (zero) found = MultiIndex(alpha);
        return;
      }
      for (std::uint32_t e = 0; e <= left; ++e) {
        alpha[i] = e;
        self(self, i + 1, left - e);
      }
      alpha[i] = 0;
    };
    visit(visit, 0, d);
    if (found) return found;
  }
  return std::nullopt;
}

bool certificate_sound(const WeightMatrix& a, const AdmissibilityCertificate& cert) {
  const bool has_l = cert.positive_functional.has_value();
  const bool has_w = cert.witness.has_value();
  if (has_l == has_w) return false;
  if (has_l != (cert.verdict == Verdict::admissible)) return false;
  if (has_l) {
    const auto& l = *cert.positive_functional;
    if (l.size() != a.r()) return false;
    for (std::size_t i = 0; i < a.n(); ++i) {
      mpq_class s = 0;
      for (std::size_t j = 0; j < a.r(); ++j) s += mpq_class(mpz_class(static_cast<long>(a(i, j)))) * l[j];
      if (cmp(s, 1) < 0) return false;
    }
    return true;
  }
  const auto& w = *cert.witness;
  if (w.size() != a.n()) return false;
  bool nonzero = false;
  for (std::size_t i = 0; i < a.n(); ++i) nonzero = nonzero || w[i] != 0;
  if (!nonzero) return false;
  for (std::size_t j = 0; j < a.r(); ++j) {
    mpz_class s = 0;
    for (std::size_t i = 0; i < a.n(); ++i) s += mpz_class(static_cast<unsigned long>(w[i])) * static_cast<long>(a(i, j));
    if (sgn(s) != 0) return false;
  }
  return true;
}

BruteQuasiResonance brute_quasi_resonance(const WeightMatrix& source, const WeightMatrix& target) {
  BruteQuasiResonance out;
  auto max_degree = [](const std::vector<MultiIndex>& basis) {
    std::uint64_t d = 0;
    for (const auto& alpha : basis) d = std::max(d, alpha.degree());
    return d;
  };
  for (std::size_t i = 0; i < target.n(); ++i) {
    out.target_orders.push_back(max_degree(box_scan_weight_space(target, target.row(i))));
  }
  std::map<std::vector<std::int64_t>, std::uint64_t> max_deg_cache;
  const std::size_t n = source.n();
  const std::size_t r = source.r();
  for (std::size_t i = 0; i < n; ++i) {
    const auto reach = static_cast<std::uint32_t>(out.target_orders[i]);
    std::set<std::vector<std::int64_t>> chars;
    std::vector<std::uint32_t> alpha(n, 0);
    auto visit = [&](auto&& self, std::size_t m, std::uint32_t left) -> void {
      if (m == n) {
        std::vector<std::int64_t> k(r, 0);
        for (std::size_t a = 0; a < n; ++a)
          for (std::size_t j = 0; j < r; ++j) k[j] += static_cast<std::int64_t>(alpha[a]) * source(a, j);
        chars.insert(k);
        return;
      }
      for (std::uint32_t e = 0; e <= left; ++e) {
        alpha[m] = e;
        self(self, m + 1, left - e);
      }
      alpha[m] = 0;
    };
    visit(visit, 0, reach);
    std::uint64_t nu = 0;
    for (const auto& k : chars) {
      auto it = max_deg_cache.find(k);
      if (it == max_deg_cache.end()) it = max_deg_cache.emplace(k, max_degree(box_scan_weight_space(source, k))).first;
      nu = std::max(nu, it->second);
    }
    out.orders.push_back(nu);
    out.order = std::max(out.order, nu);
  }
  return out;
}

double ball_moment_closed_form(const MultiIndex& alpha) {
  const std::size_t n = alpha.size();
  double num = std::pow(std::numbers::pi, static_cast<double>(n));
  for (auto e : alpha.exponents) num *= std::tgamma(e + 1.0);
  return num / std::tgamma(static_cast<double>(n + alpha.degree()) + 1.0);
}

double ball_moment_quadrature(const MultiIndex& alpha, int intervals) {
  const std::size_t n = alpha.size();
  if (n == 0 || n > 3) throw std::invalid_argument("quadrature oracle supports 1 <= n <= 3");
  if (intervals % 2) ++intervals;
  // I_m(budget) = int_0^budget s^alpha_m I_{m+1}(budget - s) ds, I_n = 1.
  auto integrate = [&](auto&& self, std::size_t m, double budget) -> double {
    if (m == n) return 1.0;
    const double h = budget / intervals;
    double sum = 0;
    for (int t = 0; t <= intervals; ++t) {
      const double s = t * h;
      const double w = (t == 0 || t == intervals) ? 1.0 : (t % 2 ? 4.0 : 2.0);
      sum += w * std::pow(s, alpha[m]) * self(self, m + 1, budget - s);
    }
    return sum * h / 3.0;
  };
  return std::pow(std::numbers::pi, static_cast<double>(n)) * integrate(integrate, 0, 1.0);
}

}  // namespace resonax::oracle
