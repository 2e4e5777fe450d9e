#include "resonax/polymap.hpp"

#include <bit>
#include <optional>
#include <set>

#include "resonax/error.hpp"

namespace resonax {

PolyMap::PolyMap(std::vector<Polynomial> components) : components_(std::move(components)) {
  if (components_.empty()) throw InvalidInput("polynomial map has no components");
  const std::size_t n = components_.front().variables();
  for (const auto& p : components_) {
    if (p.variables() != n) throw InvalidInput("map components disagree on the variable count");
  }
}

PolyMap PolyMap::identity(std::size_t n) {
  std::vector<Polynomial> c;
  for (std::size_t i = 0; i < n; ++i) c.push_back(Polynomial::variable(n, i));
  return PolyMap(std::move(c));
}

PolyMap PolyMap::shear(std::size_t n, std::uint32_t k) {
  if (n < 2) throw InvalidInput("a shear needs at least two variables");
  std::vector<Polynomial> c;
  for (std::size_t i = 0; i < n; ++i) c.push_back(Polynomial::variable(n, i));
  c[1] += Polynomial::variable(n, 0).pow(k);
  return PolyMap(std::move(c));
}

PolyMap PolyMap::shear_inverse(std::size_t n, std::uint32_t k) {
  if (n < 2) throw InvalidInput("a shear needs at least two variables");
  std::vector<Polynomial> c;
  for (std::size_t i = 0; i < n; ++i) c.push_back(Polynomial::variable(n, i));
  c[1] -= Polynomial::variable(n, 0).pow(k);
  return PolyMap(std::move(c));
}

std::vector<GaussianRational> PolyMap::at_origin() const {
  std::vector<GaussianRational> out;
  for (const auto& p : components_) out.push_back(p.constant_term());
  return out;
}

Degree PolyMap::degree() const {
  Degree d = Degree::negative_infinity();
  for (const auto& p : components_) d = std::max(d, p.degree());
  return d;
}

Polynomial compose(const Polynomial& p, const PolyMap& g) {
  if (p.variables() != g.size()) {
    throw InvalidInput("cannot substitute " + std::to_string(g.size()) + " components into a polynomial in " +
                       std::to_string(p.variables()) + " variables");
  }
  const std::size_t m = g.variables();
  std::vector<std::vector<Polynomial>> powers(g.size());
  auto power = [&](std::size_t j, std::uint32_t e) -> const Polynomial& {
    auto& cache = powers[j];
    if (cache.empty()) cache.push_back(Polynomial::constant(m, 1));
    while (cache.size() <= e) cache.push_back(cache.back() * g[j]);
    return cache[e];
  };
  Polynomial out(m);
  for (const auto& [alpha, c] : p.terms()) {
    Polynomial term = Polynomial::constant(m, c);
    for (std::size_t j = 0; j < alpha.size(); ++j) {
      if (alpha[j] > 0) term = term * power(j, alpha[j]);
    }
    out += term;
  }
  return out;
}

PolyMap compose(const PolyMap& f, const PolyMap& g) {
  std::vector<Polynomial> c;
  for (const auto& p : f.components()) c.push_back(compose(p, g));
  return PolyMap(std::move(c));
}

Polynomial jacobian_det(const PolyMap& f) {
  if (!f.is_square()) {
    throw InvalidInput("Jacobian determinant needs a square map, got " + std::to_string(f.size()) +
                       " components in " + std::to_string(f.variables()) + " variables");
  }
  const std::size_t n = f.size();
  if (n > kMaxJacobianSize) {
    throw SizeLimitError("Jacobian determinant supports n <= " + std::to_string(kMaxJacobianSize) +
                         ", got n=" + std::to_string(n));
  }
  std::vector<std::vector<Polynomial>> jac(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) jac[i].push_back(f[i].derivative(j));

  // minors[mask]: determinant of the last popcount(mask) rows restricted to the columns in mask.
  std::vector<std::optional<Polynomial>> minors(std::size_t{1} << n);
  minors[0] = Polynomial::constant(n, 1);
  auto minor = [&](auto&& self, unsigned mask) -> const Polynomial& {
    if (minors[mask]) return *minors[mask];
    const std::size_t row = n - static_cast<std::size_t>(std::popcount(mask));
    Polynomial det(n);
    int sign = 1;
    for (std::size_t j = 0; j < n; ++j) {
      if (!(mask & (1u << j))) continue;
      if (!jac[row][j].is_zero()) {
        Polynomial t = jac[row][j] * self(self, mask & ~(1u << j));
        if (sign > 0) det += t;
        else det -= t;
      }
      sign = -sign;
    }
    minors[mask] = std::move(det);
    return *minors[mask];
  };
  return minor(minor, (1u << n) - 1u);
}

Polynomial project_character(const Polynomial& p, const WeightMatrix& a, const Character& k) {
  if (p.variables() != a.n()) throw InvalidInput("polynomial variable count does not match n");
  Polynomial out(p.variables());
  for (const auto& [alpha, c] : p.terms()) {
    if (a.character_of(alpha) == k) out.add_term(alpha, c);
  }
  return out;
}

std::vector<Character> realized_characters(const Polynomial& p, const WeightMatrix& a) {
  if (p.variables() != a.n()) throw InvalidInput("polynomial variable count does not match n");
  std::set<Character, LexLess> seen;
  for (const auto& [alpha, c] : p.terms()) seen.insert(a.character_of(alpha));
  return {seen.begin(), seen.end()};
}

}  // namespace resonax
