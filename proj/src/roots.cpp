#include "tac/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <tuple>
#include <numbers>

#include "tac/errors.hpp"

namespace tac {

std::string to_string(Exactness e) {
  switch (e) {
    case Exactness::exact_rational: return "EXACT_RATIONAL";
    case Exactness::radical: return "RADICAL";
    case Exactness::numeric: return "NUMERIC";
  }
  return "?";
}

namespace {

constexpr int kAberthGuardDigits = 10;
constexpr int kMaxPolishRounds = 6;

IntPolynomial primitive(const RatPolynomial& p) {
  if (p.is_zero()) return {};
  mpz_class den = 1;
  for (const auto& c : p.coefficients()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<mpz_class> out;
  mpz_class g = 0;
  for (const auto& c : p.coefficients()) {
    mpz_class v = c.get_num() * (den / c.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    out.push_back(std::move(v));
  }
  if (out.back() < 0) g = -g;
  for (auto& v : out) v /= g;
  return IntPolynomial(std::move(out));
}

RatPolynomial exact_div(const RatPolynomial& a, const RatPolynomial& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw InternalConsistencyError("inexact polynomial division");
  return q;
}

struct LambdaSplit {
  long zero_multiplicity = 0;
  IntPolynomial mu_poly;
};

LambdaSplit split_lambda(const IntPolynomial& p) {
  if (p.is_zero()) throw InvalidInput("zero polynomial has no finite root set");
  const long v = p.lambda_valuation();
  const IntPolynomial rest = p.strip_lambda(v);
  if (!rest.is_even())
    throw InvalidInput("polynomial is not lambda^k times an even polynomial: " + to_string(p));
  return {v, rest.even_to_mu()};
}

Real tolerance(int digits, const Real& magnitude) {
  const Real one(1L, digits);
  return pow10_neg(digits - 5, digits) * max(one, magnitude);
}

// Returns the real part of a mu root after checking it is compatible with
// a Hermitian spectrum.
Real accept_mu(const Complex& mu, int digits) {
  const Real tol = tolerance(digits, abs(mu));
  if (abs(mu.im) > tol)
    throw SpectralConsistencyError("non-real mu root " + mu.re.str(20) + " + " + mu.im.str(20) + "i");
  if (mu.re < -tol) throw SpectralConsistencyError("negative mu root " + mu.re.str(20));
  return mu.re;
}

Eigenvalue zero_eigenvalue(long multiplicity, int digits) {
  return {Real::zero(digits), multiplicity, Exactness::exact_rational, RadicalExpr::integer(0)};
}

double log10_of(const Real& x) {
  if (x.is_zero()) return -std::numeric_limits<double>::infinity();
  return (log(abs(x)) / log(Real(10L, 20))).to_double();
}

// Newton polish on the real axis, raising the working precision until the
// root's condition number is covered.
Real polish_real_root(const IntPolynomial& p, const Real& start, int digits) {
  int work = digits + kAberthGuardDigits;
  Real mu = start.with_digits(work);
  double best = std::numeric_limits<double>::infinity();
  std::vector<mpz_class> mags;
  for (const auto& c : p.coefficients()) mags.push_back(abs(c));
  const IntPolynomial abs_poly(mags);
  for (int round = 0; round < kMaxPolishRounds; ++round) {
    mu = mu.with_digits(work);
    const Real step_tol = pow10_neg(work - 3, work);
    Real f, fp;
    for (int it = 0; it < 100; ++it) {
      std::tie(f, fp) = evaluate_with_derivative(p, mu);
      if (fp.is_zero()) break;
      const Real step = f / fp;
      mu -= step;
      if (abs(step) <= step_tol * max(Real(1L, work), abs(mu))) break;
    }
    std::tie(f, fp) = evaluate_with_derivative(p, mu);
    if (fp.is_zero()) break;
    const Real residual = abs(f / fp);
    const Real scale = max(Real(1L, digits), abs(mu));
    best = std::min(best, (residual / scale).to_double());
    // Relative condition number of the root: sum |a_k| |mu|^k / (|mu| |p'(mu)|).
    const Real kappa = evaluate(abs_poly, abs(mu).with_digits(20)) / (max(Real(1L, 20), abs(mu)) * abs(fp));
    const int needed = digits + 10 + static_cast<int>(std::ceil(std::max(0.0, log10_of(kappa))));
    if (needed <= work && residual < tolerance(digits, abs(mu))) return mu.with_digits(digits);
    work = std::max(needed, work + digits / 2);
  }
  throw NumericFailure("root polishing did not reach the certified residual", best);
}

}  // namespace

void sort_ascending(std::vector<Eigenvalue>& values) {
  std::sort(values.begin(), values.end(), [](const Eigenvalue& a, const Eigenvalue& b) { return a.value < b.value; });
}

std::vector<std::pair<IntPolynomial, long>> squarefree_factors(const IntPolynomial& p) {
  std::vector<std::pair<IntPolynomial, long>> out;
  if (p.degree() < 1) return out;
  const RatPolynomial f = to_rational(p);
  const RatPolynomial df = f.derivative();
  const RatPolynomial a0 = gcd(f, df);
  RatPolynomial b = exact_div(f, a0);
  RatPolynomial c = exact_div(df, a0);
  RatPolynomial d = c - b.derivative();
  for (long i = 1; b.degree() >= 1; ++i) {
    const RatPolynomial a = gcd(b, d);
    if (a.degree() >= 1) out.emplace_back(primitive(a), i);
    b = exact_div(b, a);
    c = exact_div(d, a);
    d = c - b.derivative();
  }
  return out;
}

std::vector<Eigenvalue> roots_even_poly(const IntPolynomial& q, int digits) {
  const LambdaSplit split = split_lambda(q);
  std::vector<Eigenvalue> out;
  if (split.zero_multiplicity > 0) out.push_back(zero_eigenvalue(split.zero_multiplicity, digits));
  for (const auto& [factor, mult] : squarefree_factors(split.mu_poly)) {
    if (factor.degree() > 4)
      throw InvalidInput("mu-degree " + std::to_string(factor.degree()) + " has no closed-form path");
    for (const RadicalExpr& mu : solve_by_radicals(to_rational(factor))) {
      accept_mu(mu.evaluate(digits), digits);
      const RadicalExpr lam = sqrt(mu);
      const Exactness kind = lam.is_rational() ? Exactness::exact_rational : Exactness::radical;
      const Real value = lam.evaluate(digits).re;
      out.push_back({value, mult, kind, lam});
      out.push_back({-value, mult, kind, -lam});
    }
  }
  sort_ascending(out);
  return out;
}

std::vector<Complex> aberth_roots(const IntPolynomial& p, int digits) {
  const long n = p.degree();
  if (n < 1) return {};
  const int work = digits + kAberthGuardDigits;
  if (n == 1) {
    const mpq_class r(-p.coefficient(0), p.coefficient(1));
    return {Complex(Real(r, work))};
  }

  // Starting points on circles given by the upper convex hull of
  // (k, log|a_k|).
  std::vector<std::pair<long, double>> pts;
  for (long k = 0; k <= n; ++k) {
    const mpz_class& a = p.coefficients()[static_cast<size_t>(k)];
    if (a == 0) continue;
    long e = 0;
    const double m = mpz_get_d_2exp(&e, a.get_mpz_t());
    pts.emplace_back(k, std::log(std::abs(m)) + static_cast<double>(e) * std::numbers::ln2);
  }
  std::vector<std::pair<long, double>> hull;
  for (const auto& pt : pts) {
    while (hull.size() >= 2) {
      const auto& [k1, l1] = hull[hull.size() - 2];
      const auto& [k2, l2] = hull.back();
      const double cross = static_cast<double>(k2 - k1) * (pt.second - l1) - (l2 - l1) * static_cast<double>(pt.first - k1);
      if (cross < 0) break;
      hull.pop_back();
    }
    hull.push_back(pt);
  }
  std::vector<Complex> z;
  const Real two_pi = Real::pi(work) * 2L;
  for (size_t h = 0; h + 1 < hull.size(); ++h) {
    const auto [k1, l1] = hull[h];
    const auto [k2, l2] = hull[h + 1];
    const long count = k2 - k1;
    const Real radius(std::exp((l1 - l2) / static_cast<double>(count)), work);
    for (long t = 0; t < count; ++t) {
      const Real theta =
          two_pi * t / count + two_pi * k1 / n + Real(0.7, work);
      z.push_back(Complex::polar(radius, theta));
    }
  }

  const Real eps = pow10_neg(work - 4, work);
  std::vector<bool> done(static_cast<size_t>(n), false);
  const long max_iter = 500 + 20 * n;
  double best = std::numeric_limits<double>::infinity();
  for (long iter = 0; iter < max_iter; ++iter) {
    bool all_done = true;
    best = 0;
    for (long i = 0; i < n; ++i) {
      if (done[static_cast<size_t>(i)]) continue;
      Complex& zi = z[static_cast<size_t>(i)];
      auto [f, fp] = evaluate_with_derivative(p, zi);
      if (f.is_zero()) {
        done[static_cast<size_t>(i)] = true;
        continue;
      }
      all_done = false;
      Complex sum = Complex::zero(work);
      for (long k = 0; k < n; ++k) {
        if (k == i) continue;
        sum += Complex::one(work) / (zi - z[static_cast<size_t>(k)]);
      }
      const Complex ratio = fp.is_zero() ? Complex::one(work) : f / fp;
      const Complex step = ratio / (Complex::one(work) - ratio * sum);
      zi -= step;
      const Real rel = abs(step) / max(Real(1L, work), abs(zi));
      best = std::max(best, rel.to_double());
      if (rel <= eps) done[static_cast<size_t>(i)] = true;
    }
    if (all_done) return z;
  }
  throw NumericFailure("Aberth iteration did not converge for degree " + std::to_string(n), best);
}

std::vector<Eigenvalue> roots_numeric(const IntPolynomial& p, int digits) {
  const LambdaSplit split = split_lambda(p);
  std::vector<Eigenvalue> out;
  if (split.zero_multiplicity > 0) out.push_back(zero_eigenvalue(split.zero_multiplicity, digits));
  for (const auto& [factor, mult] : squarefree_factors(split.mu_poly)) {
    for (const Complex& z : aberth_roots(factor, digits)) {
      const Real mu = polish_real_root(factor, accept_mu(z, digits), digits);
      const Real lam = sqrt(abs(mu));
      out.push_back({lam, mult, Exactness::numeric, std::nullopt});
      out.push_back({-lam, mult, Exactness::numeric, std::nullopt});
    }
  }
  sort_ascending(out);
  return out;
}

}  // namespace tac
