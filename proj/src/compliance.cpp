#include "resonax/compliance.hpp"

#include <set>

#include "resonax/error.hpp"

namespace resonax {

bool ComplianceReport::pass() const {
  if (!origin_fixed || !jacobian_constant) return false;
  for (const auto& c : components) {
    if (!c.pass()) return false;
  }
  return true;
}

ComplianceReport check_compliance(const PolyMap& f, const WeightMatrix& source,
                                  const WeightMatrix& target) {
  if (!f.is_square() || f.size() != source.n()) {
    throw InvalidInput("map must have n=" + std::to_string(source.n()) +
                       " components in as many variables");
  }
  ComplianceReport report(quasi_resonance(source, target));

  report.origin_fixed = true;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (!f[i].constant_term().is_zero()) {
      report.origin_fixed = false;
      report.nonzero_constant_terms.push_back(i);
    }
  }

  report.jacobian = jacobian_det(f);
  if (report.jacobian.is_constant() && !report.jacobian.is_zero()) {
    report.jacobian_constant = true;
    report.jacobian_value = report.jacobian.constant_term();
  }

  const WeightSpaceEnumerator enumerator(source);
  for (std::size_t i = 0; i < f.size(); ++i) {
    std::set<Character, LexLess> allowed;
    for (const auto& entry : report.quasi.sets[i]) allowed.insert(entry.character);

    ComponentVerdict v;
    for (const auto& [alpha, c] : f[i].terms()) {
      Character k = source.character_of(alpha);
      if (allowed.count(k)) continue;
      OffendingMonomial bad{alpha, k, std::nullopt};
      if (auto space = enumerator.enumerate(k)) bad.min_degree = space->min_degree;
      v.offending.push_back(std::move(bad));
    }
    v.degree = f[i].degree();
    v.degree_bound = report.quasi.orders[i];
    v.degree_ok = v.degree.at_most(v.degree_bound);
    report.components.push_back(std::move(v));
  }
  return report;
}

}  // namespace resonax
