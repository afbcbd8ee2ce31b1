#pragma once

// Closed-form roots of polynomials of degree <= 4 as exact radical
// expressions over Q.

#include <memory>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "tac/polynomial.hpp"
#include "tac/real.hpp"

namespace tac {

/// Immutable expression tree over rationals with +, -, *, /, principal
/// square roots and principal cube roots. Evaluation happens in complex
/// arithmetic, so casus irreducibilis cubics are representable.
class RadicalExpr {
 public:
  enum class Kind { rational, add, sub, mul, div, neg, sqrt, cbrt };

  RadicalExpr();  // rational 0
  static RadicalExpr rational(mpq_class value);
  static RadicalExpr integer(long value) { return rational(mpq_class(value)); }

  Kind kind() const;
  bool is_rational() const { return kind() == Kind::rational; }
  /// Valid only when is_rational().
  const mpq_class& rational_value() const;

  /// 0 for rationals, 1 for neg/sqrt/cbrt, 2 otherwise.
  int arity() const;
  /// Child `index` of a non-rational node.
  RadicalExpr operand(int index) const;
  /// Builds a node as given, without folding. Used to restore serialized
  /// trees exactly.
  static RadicalExpr make(Kind kind, const RadicalExpr& lhs, const RadicalExpr& rhs = RadicalExpr());

  friend RadicalExpr operator+(const RadicalExpr& a, const RadicalExpr& b);
  friend RadicalExpr operator-(const RadicalExpr& a, const RadicalExpr& b);
  friend RadicalExpr operator*(const RadicalExpr& a, const RadicalExpr& b);
  friend RadicalExpr operator/(const RadicalExpr& a, const RadicalExpr& b);
  friend RadicalExpr operator-(const RadicalExpr& a);
  friend RadicalExpr sqrt(const RadicalExpr& a);
  friend RadicalExpr cbrt(const RadicalExpr& a);

  /// Value at `digits` decimal digits. Internally carries extra guard
  /// digits and rounds the result, so the same call is reproducible.
  Complex evaluate(int digits) const;
  Complex evaluate_raw(int working_digits) const;

  /// Infix text such as "63 + 12*sqrt(21)" or "-2*sqrt(3)".
  std::string str() const;
  long node_count() const;

  struct Node;

 private:
  explicit RadicalExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Roots (with multiplicity) of a polynomial of degree 1..4 with rational
/// coefficients, via linear, quadratic, Cardano and Ferrari formulas.
/// Throws InvalidInput for other degrees.
std::vector<RadicalExpr> solve_by_radicals(const RatPolynomial& p);

}  // namespace tac
