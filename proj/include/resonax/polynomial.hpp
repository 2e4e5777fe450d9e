#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "resonax/arith.hpp"
#include "resonax/weights.hpp"

namespace resonax {

/// Exact element of Q(i).
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(Rational re, Rational im = 0) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }
  GaussianRational(long value) : re_(value), im_(0) {}

  static GaussianRational i() { return {0, 1}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }
  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }

  GaussianRational conj() const { return {re_, -im_}; }
  /// Throws std::domain_error for zero.
  GaussianRational inverse() const;
  std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

  GaussianRational operator-() const { return {-re_, -im_}; }
  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o) { return *this *= o.inverse(); }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

 private:
  Rational re_;
  Rational im_;
};

std::string to_string(const GaussianRational& c);

/// Polynomial degree; the zero polynomial has degree minus infinity, below every integer.
class Degree {
 public:
  static Degree negative_infinity() { return Degree(); }
  explicit Degree(std::uint64_t d) : value_(d) {}

  bool is_negative_infinity() const { return !value_.has_value(); }
  std::uint64_t value() const { return *value_; }
  bool at_most(std::uint64_t bound) const { return !value_ || *value_ <= bound; }
  std::string to_string() const { return value_ ? std::to_string(*value_) : "-inf"; }

  friend auto operator<=>(const Degree&, const Degree&) = default;

 private:
  Degree() = default;
  std::optional<std::uint64_t> value_;
};

/// Graded lexicographic order: total degree first, ties broken lexicographically.
struct GrlexLess {
  bool operator()(const MultiIndex& a, const MultiIndex& b) const;
};

/// Sparse polynomial in a fixed number of variables over Q(i). Zero coefficients are never stored.
class Polynomial {
 public:
  using Terms = std::map<MultiIndex, GaussianRational, GrlexLess>;

  explicit Polynomial(std::size_t variables) : n_(variables) {}

  static Polynomial constant(std::size_t variables, const GaussianRational& c);
  static Polynomial variable(std::size_t variables, std::size_t index);
  static Polynomial monomial(std::size_t variables, MultiIndex alpha, const GaussianRational& c = 1);

  std::size_t variables() const { return n_; }
  const Terms& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  GaussianRational coefficient(const MultiIndex& alpha) const;
  GaussianRational constant_term() const { return coefficient(MultiIndex::zero(n_)); }
  Degree degree() const;

  /// Adds c z^alpha, removing the term if it cancels.
  void add_term(const MultiIndex& alpha, const GaussianRational& c);

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial operator-() const;
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

  Polynomial scale(const GaussianRational& c) const;
  Polynomial pow(std::uint32_t e) const;
  Polynomial derivative(std::size_t index) const;

  GaussianRational evaluate(std::span<const GaussianRational> point) const;
  std::complex<double> evaluate(std::span<const std::complex<double>> point) const;

  std::string to_string() const;

 private:
  void check_same_space(const Polynomial& o) const;

  std::size_t n_;
  Terms terms_;
};

}  // namespace resonax
