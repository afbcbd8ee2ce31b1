#pragma once

// Dense univariate polynomials in lambda with exact coefficients, stored in
// ascending degree.

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tac/real.hpp"

namespace tac {

template <class Coeff>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Coeff> ascending) : c_(std::move(ascending)) { trim(); }
  static Polynomial constant(Coeff v) { return Polynomial(std::vector<Coeff>{std::move(v)}); }
  /// lambda^n
  static Polynomial monomial(long n, Coeff v = Coeff(1)) {
    std::vector<Coeff> c(static_cast<size_t>(n + 1), Coeff(0));
    c.back() = std::move(v);
    return Polynomial(std::move(c));
  }

  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const std::vector<Coeff>& coefficients() const { return c_; }
  Coeff coefficient(long k) const {
    return (k < 0 || k > degree()) ? Coeff(0) : c_[static_cast<size_t>(k)];
  }
  const Coeff& leading() const { return c_.back(); }

  /// Only even powers present (the zero polynomial counts as even).
  bool is_even() const { return parity_clean(1); }
  /// Only odd powers present.
  bool is_odd() const { return parity_clean(0); }

  /// Largest k such that lambda^k divides this polynomial.
  long lambda_valuation() const {
    long k = 0;
    while (k <= degree() && c_[static_cast<size_t>(k)] == 0) ++k;
    return k;
  }
  /// Divide out lambda^k (k <= valuation).
  Polynomial strip_lambda(long k) const {
    if (k <= 0) return *this;
    return Polynomial(std::vector<Coeff>(c_.begin() + k, c_.end()));
  }
  /// For an even polynomial q(lambda) returns r(mu) with q(lambda) = r(lambda^2).
  Polynomial even_to_mu() const {
    std::vector<Coeff> r;
    for (long k = 0; k <= degree(); k += 2) r.push_back(c_[static_cast<size_t>(k)]);
    return Polynomial(std::move(r));
  }
  /// r(mu) -> r(lambda^2)
  Polynomial mu_to_lambda() const {
    if (is_zero()) return {};
    std::vector<Coeff> q(static_cast<size_t>(2 * degree() + 1), Coeff(0));
    for (long k = 0; k <= degree(); ++k) q[static_cast<size_t>(2 * k)] = c_[static_cast<size_t>(k)];
    return Polynomial(std::move(q));
  }

  Polynomial derivative() const {
    std::vector<Coeff> d;
    for (long k = 1; k <= degree(); ++k) d.push_back(c_[static_cast<size_t>(k)] * Coeff(k));
    return Polynomial(std::move(d));
  }

  Polynomial& operator+=(const Polynomial& b) {
    if (b.c_.size() > c_.size()) c_.resize(b.c_.size(), Coeff(0));
    for (size_t k = 0; k < b.c_.size(); ++k) c_[k] += b.c_[k];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& b) {
    if (b.c_.size() > c_.size()) c_.resize(b.c_.size(), Coeff(0));
    for (size_t k = 0; k < b.c_.size(); ++k) c_[k] -= b.c_[k];
    trim();
    return *this;
  }
  Polynomial& operator*=(const Coeff& s) {
    for (auto& v : c_) v *= s;
    trim();
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Coeff& s) { return a *= s; }
  friend Polynomial operator-(Polynomial a) { return a *= Coeff(-1); }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Coeff> r(a.c_.size() + b.c_.size() - 1, Coeff(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (size_t k = 0; k < b.c_.size(); ++k) r[i + k] += a.c_[i] * b.c_[k];
    }
    return Polynomial(std::move(r));
  }
  Polynomial pow(long n) const {
    Polynomial r = constant(Coeff(1));
    for (long k = 0; k < n; ++k) r = r * *this;
    return r;
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  bool parity_clean(long bad) const {
    for (long k = bad; k <= degree(); k += 2)
      if (c_[static_cast<size_t>(k)] != 0) return false;
    return true;
  }

  std::vector<Coeff> c_;
};

using IntPolynomial = Polynomial<mpz_class>;
using RatPolynomial = Polynomial<mpq_class>;

RatPolynomial to_rational(const IntPolynomial& p);
/// Throws InternalConsistencyError if any coefficient is not an integer.
IntPolynomial to_integer(const RatPolynomial& p);

/// Euclidean division over Q. Throws InvalidInput on a zero divisor.
std::pair<RatPolynomial, RatPolynomial> divmod(const RatPolynomial& a, const RatPolynomial& b);
/// Monic greatest common divisor over Q (zero if both inputs are zero).
RatPolynomial gcd(RatPolynomial a, RatPolynomial b);

/// Horner evaluation at the precision of `x`.
Real evaluate(const IntPolynomial& p, const Real& x);
Complex evaluate(const IntPolynomial& p, const Complex& x);
/// p(x) and p'(x) together.
std::pair<Complex, Complex> evaluate_with_derivative(const IntPolynomial& p, const Complex& x);
std::pair<Real, Real> evaluate_with_derivative(const IntPolynomial& p, const Real& x);

/// Human readable form such as "-l^5 + 15*l^3 - 36*l".
std::string to_string(const IntPolynomial& p, std::string_view var = "l");

/// Parses a product of factors written like the reference table,
/// e.g. "-l(l^2-3)(l^2-12)" or "(l^4-126l^2+945)^2". Accepts optional '*'
/// between factors and between a coefficient and the variable 'l'.
IntPolynomial parse_factored(std::string_view text);

}  // namespace tac
