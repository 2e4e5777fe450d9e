#include "resonax/admissibility.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "resonax/error.hpp"

namespace resonax {
namespace {

// coef . x >= rhs, obtained as the combination sum_i mult_i (a_i . x >= 1).
struct Inequality {
  std::vector<Rational> coef;
  Rational rhs;
  std::vector<Rational> mult;

  bool coefficients_zero() const {
    return std::all_of(coef.begin(), coef.end(), [](const Rational& c) { return sgn(c) == 0; });
  }
};

constexpr std::size_t kMaxInequalities = 200000;

// Scale so the first nonzero coefficient has magnitude one.
void normalize(Inequality& q) {
  auto it = std::find_if(q.coef.begin(), q.coef.end(), [](const Rational& c) { return sgn(c) != 0; });
  if (it == q.coef.end()) return;
  const Rational s = 1 / abs(*it);
  for (auto& c : q.coef) c *= s;
  q.rhs *= s;
  for (auto& m : q.mult) m *= s;
}

struct SystemKey {
  bool operator()(const Inequality* a, const Inequality* b) const {
    if (a->rhs != b->rhs) return a->rhs < b->rhs;
    return a->coef < b->coef;
  }
};

struct Elimination {
  std::vector<std::vector<Inequality>> stages;  // stages[v]: system in variables 0..v-1
  std::optional<std::vector<Rational>> infeasible_multipliers;
};

// Drops trivially true rows and exact duplicates; reports 0 >= positive as a contradiction.
bool tidy(std::vector<Inequality>& system, std::optional<std::vector<Rational>>& contradiction) {
  std::vector<Inequality> kept;
  std::set<const Inequality*, SystemKey> seen;
  kept.reserve(system.size());
  for (auto& q : system) {
    if (q.coefficients_zero()) {
      if (sgn(q.rhs) > 0) {
        contradiction = q.mult;
        return false;
      }
      continue;
    }
    kept.push_back(std::move(q));
  }
  std::vector<std::size_t> survivors;
  for (std::size_t i = 0; i < kept.size(); ++i) {
    if (seen.insert(&kept[i]).second) survivors.push_back(i);
  }
  seen.clear();
  std::vector<Inequality> unique;
  unique.reserve(survivors.size());
  for (auto i : survivors) unique.push_back(std::move(kept[i]));
  system = std::move(unique);
  if (system.size() > kMaxInequalities) {
    throw SizeLimitError("Fourier-Motzkin elimination exceeded " + std::to_string(kMaxInequalities) +
                         " inequalities");
  }
  return true;
}

Elimination eliminate_all(const WeightMatrix& a) {
  const std::size_t n = a.n();
  const std::size_t r = a.r();
  Elimination out;
  out.stages.resize(r + 1);

  std::vector<Inequality> system;
  for (std::size_t i = 0; i < n; ++i) {
    Inequality q;
    for (std::size_t j = 0; j < r; ++j) q.coef.emplace_back(from_int64(a(i, j)));
    q.rhs = 1;
    q.mult.assign(n, Rational(0));
    q.mult[i] = 1;
    normalize(q);
    system.push_back(std::move(q));
  }
  if (!tidy(system, out.infeasible_multipliers)) return out;
  out.stages[r] = system;

  // Eliminate the last variable first so back-substitution fixes lambda_1 first.
  for (std::size_t v = r; v-- > 0;) {
    std::vector<Inequality> next;
    std::vector<const Inequality*> pos, neg;
    for (const auto& q : out.stages[v + 1]) {
      const int s = sgn(q.coef[v]);
      if (s == 0) next.push_back(q);
      else if (s > 0) pos.push_back(&q);
      else neg.push_back(&q);
    }
    for (const Inequality* p : pos) {
      for (const Inequality* q : neg) {
        const Rational wp = -q->coef[v];
        const Rational wq = p->coef[v];
        Inequality c;
        c.coef.resize(r);
        for (std::size_t j = 0; j < r; ++j) c.coef[j] = wp * p->coef[j] + wq * q->coef[j];
        c.coef[v] = 0;
        c.rhs = wp * p->rhs + wq * q->rhs;
        c.mult.resize(n);
        for (std::size_t i = 0; i < n; ++i) c.mult[i] = wp * p->mult[i] + wq * q->mult[i];
        normalize(c);
        next.push_back(std::move(c));
      }
    }
    if (!tidy(next, out.infeasible_multipliers)) return out;
    out.stages[v] = std::move(next);
  }
  return out;
}

std::vector<Rational> back_substitute(const Elimination& elim, std::size_t r) {
  std::vector<Rational> x(r, Rational(0));
  for (std::size_t v = 0; v < r; ++v) {
    std::optional<Rational> lo, hi;
    for (const auto& q : elim.stages[v + 1]) {
      const int s = sgn(q.coef[v]);
      if (s == 0) continue;
      Rational rest = q.rhs;
      for (std::size_t j = 0; j < v; ++j) rest -= q.coef[j] * x[j];
      const Rational bound = rest / q.coef[v];
      if (s > 0) {
        if (!lo || bound > *lo) lo = bound;
      } else {
        if (!hi || bound < *hi) hi = bound;
      }
    }
    // Closest point to zero within [lo, hi].
    Rational value = 0;
    if (lo && value < *lo) value = *lo;
    if (hi && value > *hi) value = *hi;
    x[v] = value;
  }
  return x;
}

MultiIndex integer_witness(const std::vector<Rational>& mult) {
  BigInt lcm = 1;
  for (const auto& m : mult) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m.get_den_mpz_t());
  std::vector<BigInt> scaled;
  BigInt g = 0;
  for (const auto& m : mult) {
    BigInt v = m.get_num() * (lcm / m.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    scaled.push_back(v);
  }
  MultiIndex alpha = MultiIndex::zero(mult.size());
  for (std::size_t i = 0; i < mult.size(); ++i) {
    const BigInt v = scaled[i] / g;
    if (sgn(v) < 0 || v > std::numeric_limits<std::uint32_t>::max()) {
      throw OverflowError("witness exponent out of range: " + v.get_str());
    }
    alpha[i] = static_cast<std::uint32_t>(v.get_ui());
  }
  return alpha;
}

}  // namespace

AdmissibilityCertificate check_admissible(const WeightMatrix& a) {
  const Elimination elim = eliminate_all(a);
  AdmissibilityCertificate cert;
  if (elim.infeasible_multipliers) {
    cert.verdict = Verdict::inadmissible;
    cert.witness = integer_witness(*elim.infeasible_multipliers);
  } else {
    cert.verdict = Verdict::admissible;
    cert.positive_functional = back_substitute(elim, a.r());
  }
  return cert;
}

std::vector<Rational> positive_functional(const WeightMatrix& a) {
  AdmissibilityCertificate cert = check_admissible(a);
  if (!cert.admissible()) {
    throw InadmissibleError("action is not admissible: z^" + to_string(*cert.witness) +
                            " is invariant");
  }
  return std::move(*cert.positive_functional);
}

bool verify_certificate(const WeightMatrix& a, const AdmissibilityCertificate& cert) {
  if (cert.positive_functional.has_value() == cert.witness.has_value()) return false;
  if (cert.admissible() != cert.positive_functional.has_value()) return false;
  if (cert.positive_functional) {
    const auto& lambda = *cert.positive_functional;
    if (lambda.size() != a.r()) return false;
    for (std::size_t i = 0; i < a.n(); ++i) {
      Rational dot = 0;
      for (std::size_t j = 0; j < a.r(); ++j) dot += Rational(from_int64(a(i, j))) * lambda[j];
      if (dot < 1) return false;
    }
    return true;
  }
  const MultiIndex& alpha = *cert.witness;
  if (alpha.size() != a.n() || alpha.is_zero()) return false;
  return is_zero(a.character_of(alpha));
}

}  // namespace resonax
