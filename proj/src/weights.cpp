#include "resonax/weights.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "resonax/error.hpp"

namespace resonax {

// ---- arithmetic helpers ----

Rational parse_rational(const std::string& text) {
  auto bad = [&] { return InvalidInput("malformed rational \"" + text + "\""); };
  const auto slash = text.find('/');
  auto is_int = [](const std::string& s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i >= s.size()) return false;
    return std::all_of(s.begin() + static_cast<long>(i), s.end(),
                       [](char c) { return c >= '0' && c <= '9'; });
  };
  const std::string num = text.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!is_int(num) || !is_int(den) || den[0] == '-' || den[0] == '+') throw bad();
  BigInt p(num[0] == '+' ? num.substr(1) : num, 10);
  BigInt q(den, 10);
  if (sgn(q) == 0) throw InvalidInput("zero denominator in \"" + text + "\"");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) { return value.get_str(10); }
std::string to_string(const BigInt& value) { return value.get_str(10); }

BigInt floor_div(const BigInt& num, const BigInt& den) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

bool LexLess::operator()(const std::vector<BigInt>& a, const std::vector<BigInt>& b) const {
  const std::size_t m = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < m; ++i) {
    const int c = cmp(a[i], b[i]);
    if (c != 0) return c < 0;
  }
  return a.size() < b.size();
}

std::uint32_t checked_add(std::uint32_t a, std::uint32_t b) {
  std::uint32_t out;
  if (__builtin_add_overflow(a, b, &out)) throw OverflowError("exponent overflow");
  return out;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) throw OverflowError("int64 overflow in addition");
  return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw OverflowError("int64 overflow in multiplication");
  return out;
}

bool fits_int64(const BigInt& value) {
  static const BigInt lo = from_int64(std::numeric_limits<std::int64_t>::min());
  static const BigInt hi = from_int64(std::numeric_limits<std::int64_t>::max());
  return value >= lo && value <= hi;
}

std::int64_t to_int64(const BigInt& value) {
  if (!fits_int64(value)) throw OverflowError("value " + value.get_str() + " exceeds int64");
  return static_cast<std::int64_t>(value.get_si());
}

BigInt from_int64(std::int64_t value) {
  static_assert(sizeof(long) == sizeof(std::int64_t));
  return BigInt(static_cast<long>(value));
}

// ---- MultiIndex / Character ----

std::uint64_t MultiIndex::degree() const {
  std::uint64_t d = 0;
  for (auto e : exponents) d += e;
  return d;
}

bool MultiIndex::is_zero() const {
  return std::all_of(exponents.begin(), exponents.end(), [](auto e) { return e == 0; });
}

MultiIndex MultiIndex::operator+(const MultiIndex& other) const {
  if (other.size() != size()) throw InvalidInput("multi-index length mismatch");
  MultiIndex out(exponents);
  for (std::size_t i = 0; i < size(); ++i) out[i] = checked_add(out[i], other[i]);
  return out;
}

Character make_character(std::span<const std::int64_t> k) {
  Character c;
  c.reserve(k.size());
  for (auto v : k) c.push_back(from_int64(v));
  return c;
}

bool is_zero(const Character& k) {
  return std::all_of(k.begin(), k.end(), [](const BigInt& v) { return sgn(v) == 0; });
}

namespace {
template <typename Seq>
std::string bracketed(const Seq& seq) {
  std::ostringstream os;
  os << '(';
  bool first = true;
  for (const auto& v : seq) {
    if (!first) os << ',';
    os << v;
    first = false;
  }
  os << ')';
  return os.str();
}
}  // namespace

std::string to_string(const Character& k) { return bracketed(k); }
std::string to_string(const MultiIndex& alpha) { return bracketed(alpha.exponents); }

// ---- WeightMatrix ----

WeightMatrix::WeightMatrix(std::vector<std::vector<std::int64_t>> rows) : rows_(std::move(rows)) {
  if (rows_.empty()) throw InvalidInput("weight matrix has no rows");
  const std::size_t r = rows_.front().size();
  if (r == 0) throw InvalidInput("weight matrix rows are empty (torus rank must be >= 1)");
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i].size() != r) {
      throw InvalidInput("ragged weight matrix: row " + std::to_string(i) + " has " +
                         std::to_string(rows_[i].size()) + " entries, expected " + std::to_string(r));
    }
  }
}

Character WeightMatrix::character_of(const MultiIndex& alpha) const {
  if (alpha.size() != n()) throw InvalidInput("multi-index length does not match n");
  Character k(r(), BigInt(0));
  BigInt term;
  for (std::size_t i = 0; i < n(); ++i) {
    if (alpha[i] == 0) continue;
    const BigInt e(static_cast<unsigned long>(alpha[i]));
    for (std::size_t j = 0; j < r(); ++j) {
      term = e * from_int64(rows_[i][j]);
      k[j] += term;
    }
  }
  return k;
}

Character WeightMatrix::row_character(std::size_t i) const { return make_character(rows_[i]); }

std::size_t WeightMatrix::rank() const {
  std::vector<std::vector<Rational>> m(n(), std::vector<Rational>(r()));
  for (std::size_t i = 0; i < n(); ++i)
    for (std::size_t j = 0; j < r(); ++j) m[i][j] = Rational(from_int64(rows_[i][j]));
  std::size_t rank = 0;
  for (std::size_t col = 0; col < r() && rank < n(); ++col) {
    std::size_t pivot = rank;
    while (pivot < n() && sgn(m[pivot][col]) == 0) ++pivot;
    if (pivot == n()) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t i = rank + 1; i < n(); ++i) {
      if (sgn(m[i][col]) == 0) continue;
      const Rational f = m[i][col] / m[rank][col];
      for (std::size_t j = col; j < r(); ++j) m[i][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

WeightMatrix WeightMatrix::select_rows(std::span<const std::size_t> indices) const {
  std::vector<std::vector<std::int64_t>> rows;
  rows.reserve(indices.size());
  for (auto i : indices) rows.push_back(rows_.at(i));
  return WeightMatrix(std::move(rows));
}

WeightMatrix WeightMatrix::column(std::span<const std::int64_t> weights) {
  std::vector<std::vector<std::int64_t>> rows;
  for (auto w : weights) rows.push_back({w});
  return WeightMatrix(std::move(rows));
}

ValidatedMatrix validate_weight_matrix(std::vector<std::vector<std::int64_t>> rows) {
  ValidatedMatrix out{WeightMatrix(std::move(rows)), {}};
  const WeightMatrix& a = out.matrix;
  const std::size_t rank = a.rank();
  if (rank < a.r()) {
    out.warnings.push_back("rank " + std::to_string(rank) + " < r=" + std::to_string(a.r()) +
                           "; invariants depend only on alpha -> alpha^T A and are computed as given");
  }
  for (std::size_t i = 0; i < a.n(); ++i) {
    for (std::size_t j = i + 1; j < a.n(); ++j) {
      if (a.rows()[i] == a.rows()[j]) {
        out.warnings.push_back("rows " + std::to_string(i) + " and " + std::to_string(j) +
                               " are equal");
      }
    }
  }
  return out;
}

}  // namespace resonax
