#include "resonax/resonance.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "resonax/error.hpp"

namespace resonax {

ResonanceReport resonance(const WeightSpaceEnumerator& enumerator) {
  const WeightMatrix& a = enumerator.matrix();
  ResonanceReport report;
  std::set<Character, LexLess> linear;
  for (std::size_t i = 0; i < a.n(); ++i) {
    Character k = a.row_character(i);
    auto space = enumerator.enumerate(k);
    if (!space || space->max_degree < 1) {
      throw std::logic_error("resonance set E_" + std::to_string(i) + " does not contain z_i");
    }
    report.resonance_sets.push_back(std::move(space->basis));
    report.orders.push_back(space->max_degree);
    report.order = std::max(report.order, space->max_degree);
    linear.insert(std::move(k));
  }
  report.linear_characters.assign(linear.begin(), linear.end());
  return report;
}

ResonanceReport resonance(const WeightMatrix& a) { return resonance(WeightSpaceEnumerator(a)); }

namespace {

// Minimum degree of every character realized by some alpha with |alpha| <= max_degree.
void realized_characters(const WeightMatrix& a, std::uint64_t max_degree,
                         std::map<Character, std::uint64_t, LexLess>& min_degree) {
  const std::size_t n = a.n();
  const std::size_t r = a.r();
  std::vector<Character> rows;
  for (std::size_t i = 0; i < n; ++i) rows.push_back(a.row_character(i));

  Character current(r, BigInt(0));
  auto visit = [&](auto&& self, std::size_t i, std::uint64_t degree) -> void {
    if (i == n) {
      auto [it, inserted] = min_degree.emplace(current, degree);
      if (!inserted) it->second = std::min(it->second, degree);
      return;
    }
    const Character saved = current;
    for (std::uint64_t e = 0; degree + e <= max_degree; ++e) {
      if (e > 0) {
        for (std::size_t j = 0; j < r; ++j) current[j] += rows[i][j];
      }
      self(self, i + 1, degree + e);
    }
    current = saved;
  };
  visit(visit, 0, 0);
}

}  // namespace

QuasiResonanceReport quasi_resonance(const WeightMatrix& source, const WeightMatrix& target) {
  if (source.n() != target.n()) {
    throw InvalidInput("actions live on different spaces: n=" + std::to_string(source.n()) +
                       " vs n'=" + std::to_string(target.n()));
  }
  const WeightSpaceEnumerator source_enum(source);
  const ResonanceReport target_res = resonance(WeightSpaceEnumerator(target));

  QuasiResonanceReport report{source, target, target_res.orders, {}, {}, 0};
  const std::uint64_t reach = *std::max_element(target_res.orders.begin(), target_res.orders.end());

  std::map<Character, std::uint64_t, LexLess> min_degree;
  realized_characters(source, reach, min_degree);

  std::map<Character, std::pair<std::uint64_t, std::uint64_t>, LexLess> extremes;
  for (const auto& [k, d] : min_degree) {
    auto space = source_enum.enumerate(k);
    if (!space || space->min_degree != d) {
      throw std::logic_error("degree bookkeeping disagrees with enumeration at k=" + to_string(k));
    }
    extremes.emplace(k, std::pair{space->min_degree, space->max_degree});
  }

  for (std::size_t i = 0; i < source.n(); ++i) {
    std::vector<CharacterDegrees> set;
    std::uint64_t nu = 0;
    for (const auto& [k, dd] : extremes) {
      if (dd.first > report.target_orders[i]) continue;
      set.push_back({k, dd.first, dd.second});
      nu = std::max(nu, dd.second);
    }
    report.sets.push_back(std::move(set));
    report.orders.push_back(nu);
    report.order = std::max(report.order, nu);
  }
  return report;
}

CartanVerdict is_cartan_linear(const WeightMatrix& source, const WeightMatrix& target) {
  if (source.n() != target.n()) {
    throw InvalidInput("actions live on different spaces: n=" + std::to_string(source.n()) +
                       " vs n'=" + std::to_string(target.n()));
  }
  CartanVerdict v;
  v.source_order = resonance(source).order;
  v.target_order = resonance(target).order;
  v.linear = v.source_order == 1 && v.target_order == 1;
  if (v.linear) {
    const auto q = quasi_resonance(source, target);
    if (q.order != 1) throw std::logic_error("resonance orders are one but nu != 1");
    v.explanation =
        "mu_rho = mu_rho' = 1, so nu_rho_rho' = 1: every origin-fixing biholomorphism is linear";
  } else {
    v.explanation = "mu_rho = " + std::to_string(v.source_order) + ", mu_rho' = " +
                    std::to_string(v.target_order) + "; linearity is not implied";
  }
  return v;
}

}  // namespace resonax
