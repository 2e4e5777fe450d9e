#include "resonax/polynomial.hpp"

#include <sstream>
#include <stdexcept>

#include "resonax/error.hpp"

namespace resonax {

GaussianRational GaussianRational::inverse() const {
  const Rational norm = re_ * re_ + im_ * im_;
  if (sgn(norm) == 0) throw std::domain_error("inverse of zero");
  return {re_ / norm, -im_ / norm};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

std::string to_string(const GaussianRational& c) {
  if (sgn(c.im()) == 0) return to_string(c.re());
  if (sgn(c.re()) == 0) return to_string(c.im()) + "i";
  return "(" + to_string(c.re()) + (sgn(c.im()) > 0 ? "+" : "") + to_string(c.im()) + "i)";
}

bool GrlexLess::operator()(const MultiIndex& a, const MultiIndex& b) const {
  const auto da = a.degree();
  const auto db = b.degree();
  if (da != db) return da < db;
  return a.exponents < b.exponents;
}

Polynomial Polynomial::constant(std::size_t variables, const GaussianRational& c) {
  Polynomial p(variables);
  p.add_term(MultiIndex::zero(variables), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t variables, std::size_t index) {
  if (index >= variables) throw InvalidInput("variable index out of range");
  MultiIndex alpha = MultiIndex::zero(variables);
  alpha[index] = 1;
  return monomial(variables, std::move(alpha));
}

Polynomial Polynomial::monomial(std::size_t variables, MultiIndex alpha, const GaussianRational& c) {
  if (alpha.size() != variables) throw InvalidInput("monomial exponent length mismatch");
  Polynomial p(variables);
  p.add_term(alpha, c);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_zero());
}

GaussianRational Polynomial::coefficient(const MultiIndex& alpha) const {
  auto it = terms_.find(alpha);
  return it == terms_.end() ? GaussianRational() : it->second;
}

Degree Polynomial::degree() const {
  if (terms_.empty()) return Degree::negative_infinity();
  return Degree(terms_.rbegin()->first.degree());
}

void Polynomial::add_term(const MultiIndex& alpha, const GaussianRational& c) {
  if (alpha.size() != n_) throw InvalidInput("term exponent length does not match variable count");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(alpha, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void Polynomial::check_same_space(const Polynomial& o) const {
  if (o.n_ != n_) {
    throw InvalidInput("polynomials in " + std::to_string(n_) + " and " + std::to_string(o.n_) +
                       " variables");
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  check_same_space(o);
  for (const auto& [alpha, c] : o.terms_) add_term(alpha, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  check_same_space(o);
  for (const auto& [alpha, c] : o.terms_) add_term(alpha, -c);
  return *this;
}

Polynomial Polynomial::operator-() const { return scale(GaussianRational(-1)); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_same_space(b);
  Polynomial out(a.n_);
  for (const auto& [alpha, c] : a.terms_) {
    for (const auto& [beta, d] : b.terms_) out.add_term(alpha + beta, c * d);
  }
  return out;
}

Polynomial Polynomial::scale(const GaussianRational& c) const {
  Polynomial out(n_);
  if (c.is_zero()) return out;
  for (const auto& [alpha, d] : terms_) out.terms_.emplace(alpha, c * d);
  return out;
}

Polynomial Polynomial::pow(std::uint32_t e) const {
  Polynomial result = constant(n_, 1);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::derivative(std::size_t index) const {
  if (index >= n_) throw InvalidInput("derivative variable out of range");
  Polynomial out(n_);
  for (const auto& [alpha, c] : terms_) {
    if (alpha[index] == 0) continue;
    MultiIndex beta = alpha;
    beta[index] -= 1;
    out.add_term(beta, c * GaussianRational(static_cast<long>(alpha[index])));
  }
  return out;
}

GaussianRational Polynomial::evaluate(std::span<const GaussianRational> point) const {
  if (point.size() != n_) throw InvalidInput("evaluation point has the wrong dimension");
  GaussianRational sum;
  for (const auto& [alpha, c] : terms_) {
    GaussianRational m = c;
    for (std::size_t i = 0; i < n_; ++i)
      for (std::uint32_t e = 0; e < alpha[i]; ++e) m *= point[i];
    sum += m;
  }
  return sum;
}

std::complex<double> Polynomial::evaluate(std::span<const std::complex<double>> point) const {
  if (point.size() != n_) throw InvalidInput("evaluation point has the wrong dimension");
  std::complex<double> sum = 0;
  for (const auto& [alpha, c] : terms_) {
    std::complex<double> m = c.to_complex();
    for (std::size_t i = 0; i < n_; ++i)
      for (std::uint32_t e = 0; e < alpha[i]; ++e) m *= point[i];
    sum += m;
  }
  return sum;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [alpha, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    const bool unit = c == GaussianRational(1);
    if (!unit || alpha.is_zero()) os << resonax::to_string(c);
    for (std::size_t i = 0; i < n_; ++i) {
      if (alpha[i] == 0) continue;
      os << "z" << (i + 1);
      if (alpha[i] > 1) os << '^' << alpha[i];
    }
  }
  return os.str();
}

}  // namespace resonax
