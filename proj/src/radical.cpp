#include "tac/radical.hpp"

#include "tac/errors.hpp"

namespace tac {

struct RadicalExpr::Node {
  Kind kind = Kind::rational;
  mpq_class value;
  std::shared_ptr<const Node> lhs;
  std::shared_ptr<const Node> rhs;
};

namespace {

using NodePtr = std::shared_ptr<const RadicalExpr::Node>;
using Kind = RadicalExpr::Kind;

constexpr int kEvalGuardDigits = 30;
// Trial division bound when pulling square factors out of sqrt arguments.
constexpr unsigned long kSquareFactorBound = 100000;

NodePtr make_rational(mpq_class v) {
  auto n = std::make_shared<RadicalExpr::Node>();
  n->kind = Kind::rational;
  n->value = std::move(v);
  n->value.canonicalize();
  return n;
}

NodePtr make_node(Kind k, NodePtr a, NodePtr b = nullptr) {
  auto n = std::make_shared<RadicalExpr::Node>();
  n->kind = k;
  n->lhs = std::move(a);
  n->rhs = std::move(b);
  return n;
}

bool is_rat(const NodePtr& n) { return n->kind == Kind::rational; }
bool is_rat(const NodePtr& n, long v) { return is_rat(n) && n->value == v; }

// n = square^2 * rest with rest free of squares of primes below the bound.
void split_square(const mpz_class& n, mpz_class& square, mpz_class& rest) {
  square = 1;
  rest = n;
  if (rest <= 1) return;
  if (mpz_perfect_square_p(rest.get_mpz_t())) {
    mpz_sqrt(square.get_mpz_t(), rest.get_mpz_t());
    rest = 1;
    return;
  }
  for (unsigned long p = 2; p <= kSquareFactorBound; p += (p == 2 ? 1 : 2)) {
    const mpz_class p2 = mpz_class(p) * p;
    if (p2 > rest) break;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p * p)) {
      rest /= p2;
      square *= p;
    }
  }
  if (rest > 1 && mpz_perfect_square_p(rest.get_mpz_t())) {
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), rest.get_mpz_t());
    square *= r;
    rest = 1;
  }
}

int precedence(const NodePtr& n) {
  switch (n->kind) {
    case Kind::add:
    case Kind::sub: return 1;
    case Kind::mul:
    case Kind::div: return 2;
    case Kind::neg: return 3;
    case Kind::rational:
      if (n->value < 0) return 3;
      return n->value.get_den() == 1 ? 5 : 2;
    case Kind::sqrt:
    case Kind::cbrt: return 5;
  }
  return 5;
}

std::string render(const NodePtr& n);

std::string wrap(const NodePtr& n, int min_prec) {
  std::string s = render(n);
  return precedence(n) < min_prec ? "(" + s + ")" : s;
}

std::string render(const NodePtr& n) {
  switch (n->kind) {
    case Kind::rational: return n->value.get_str();
    case Kind::add: return wrap(n->lhs, 1) + " + " + wrap(n->rhs, 1);
    case Kind::sub: return wrap(n->lhs, 1) + " - " + wrap(n->rhs, 2);
    case Kind::mul: return wrap(n->lhs, 2) + "*" + wrap(n->rhs, 3);
    case Kind::div: return wrap(n->lhs, 2) + "/" + wrap(n->rhs, 4);
    case Kind::neg: return "-" + wrap(n->lhs, 3);
    case Kind::sqrt: return "sqrt(" + render(n->lhs) + ")";
    case Kind::cbrt: return "cbrt(" + render(n->lhs) + ")";
  }
  return "?";
}

Complex eval(const NodePtr& n, int w) {
  switch (n->kind) {
    case Kind::rational: return Complex(Real(n->value, w));
    case Kind::add: return eval(n->lhs, w) + eval(n->rhs, w);
    case Kind::sub: return eval(n->lhs, w) - eval(n->rhs, w);
    case Kind::mul: return eval(n->lhs, w) * eval(n->rhs, w);
    case Kind::div: return eval(n->lhs, w) / eval(n->rhs, w);
    case Kind::neg: return -eval(n->lhs, w);
    case Kind::sqrt: {
      // exact real arguments take the real or purely imaginary branch
      if (is_rat(n->lhs)) {
        const Real r = sqrt(abs(Real(n->lhs->value, w)));
        return n->lhs->value < 0 ? Complex(Real::zero(w), r) : Complex(r);
      }
      return sqrt(eval(n->lhs, w));
    }
    case Kind::cbrt:
      if (is_rat(n->lhs)) return Complex(cbrt(Real(n->lhs->value, w)));
      return cbrt(eval(n->lhs, w));
  }
  throw InternalConsistencyError("unknown radical node");
}

long count(const NodePtr& n) {
  if (!n) return 0;
  return 1 + count(n->lhs) + count(n->rhs);
}

}  // namespace

RadicalExpr::RadicalExpr() : node_(make_rational(mpq_class(0))) {}

RadicalExpr RadicalExpr::rational(mpq_class value) { return RadicalExpr(make_rational(std::move(value))); }

RadicalExpr::Kind RadicalExpr::kind() const { return node_->kind; }

const mpq_class& RadicalExpr::rational_value() const {
  if (!is_rational()) throw InvalidInput("radical expression is not rational");
  return node_->value;
}

int RadicalExpr::arity() const {
  if (!node_->lhs) return 0;
  return node_->rhs ? 2 : 1;
}

RadicalExpr RadicalExpr::operand(int index) const {
  if (index < 0 || index >= arity()) throw InvalidInput("radical node has no operand " + std::to_string(index));
  return RadicalExpr(index == 0 ? node_->lhs : node_->rhs);
}

RadicalExpr RadicalExpr::make(Kind kind, const RadicalExpr& lhs, const RadicalExpr& rhs) {
  switch (kind) {
    case Kind::rational: throw InvalidInput("use RadicalExpr::rational for leaves");
    case Kind::neg:
    case Kind::sqrt:
    case Kind::cbrt: return RadicalExpr(make_node(kind, lhs.node_));
    default: return RadicalExpr(make_node(kind, lhs.node_, rhs.node_));
  }
}

RadicalExpr operator+(const RadicalExpr& a, const RadicalExpr& b) {
  if (is_rat(a.node_) && is_rat(b.node_)) return RadicalExpr::rational(a.node_->value + b.node_->value);
  if (is_rat(a.node_, 0)) return b;
  if (is_rat(b.node_, 0)) return a;
  if (b.node_->kind == Kind::neg) return RadicalExpr(make_node(Kind::sub, a.node_, b.node_->lhs));
  if (is_rat(b.node_) && b.node_->value < 0)
    return RadicalExpr(make_node(Kind::sub, a.node_, make_rational(-b.node_->value)));
  return RadicalExpr(make_node(Kind::add, a.node_, b.node_));
}

RadicalExpr operator-(const RadicalExpr& a, const RadicalExpr& b) {
  if (is_rat(a.node_) && is_rat(b.node_)) return RadicalExpr::rational(a.node_->value - b.node_->value);
  if (is_rat(b.node_, 0)) return a;
  if (is_rat(a.node_, 0)) return -b;
  if (is_rat(b.node_) && b.node_->value < 0)
    return RadicalExpr(make_node(Kind::add, a.node_, make_rational(-b.node_->value)));
  return RadicalExpr(make_node(Kind::sub, a.node_, b.node_));
}

RadicalExpr operator*(const RadicalExpr& a, const RadicalExpr& b) {
  if (is_rat(a.node_) && is_rat(b.node_)) return RadicalExpr::rational(a.node_->value * b.node_->value);
  if (is_rat(a.node_, 0) || is_rat(b.node_, 0)) return RadicalExpr::integer(0);
  if (is_rat(a.node_, 1)) return b;
  if (is_rat(b.node_, 1)) return a;
  if (is_rat(a.node_, -1)) return -b;
  if (is_rat(b.node_, -1)) return -a;
  // keep rational factors in front
  if (is_rat(b.node_)) return RadicalExpr(make_node(Kind::mul, b.node_, a.node_));
  return RadicalExpr(make_node(Kind::mul, a.node_, b.node_));
}

RadicalExpr operator/(const RadicalExpr& a, const RadicalExpr& b) {
  if (is_rat(b.node_, 0)) throw InvalidInput("radical expression divided by zero");
  if (is_rat(a.node_) && is_rat(b.node_)) return RadicalExpr::rational(a.node_->value / b.node_->value);
  if (is_rat(b.node_, 1)) return a;
  if (is_rat(a.node_, 0)) return RadicalExpr::integer(0);
  return RadicalExpr(make_node(Kind::div, a.node_, b.node_));
}

RadicalExpr operator-(const RadicalExpr& a) {
  if (is_rat(a.node_)) return RadicalExpr::rational(-a.node_->value);
  if (a.node_->kind == Kind::neg) return RadicalExpr(a.node_->lhs);
  if (a.node_->kind == Kind::mul && is_rat(a.node_->lhs))
    return RadicalExpr(make_node(Kind::mul, make_rational(-a.node_->lhs->value), a.node_->rhs));
  return RadicalExpr(make_node(Kind::neg, a.node_));
}

RadicalExpr sqrt(const RadicalExpr& a) {
  if (is_rat(a.node_) && a.node_->value >= 0) {
    const mpq_class& q = a.node_->value;
    if (q == 0) return a;
    // sqrt(n/d) = sqrt(n d)/d
    mpz_class square, rest;
    split_square(q.get_num() * q.get_den(), square, rest);
    const RadicalExpr factor = RadicalExpr::rational(mpq_class(square, q.get_den()));
    if (rest == 1) return factor;
    return factor * RadicalExpr(make_node(Kind::sqrt, make_rational(mpq_class(rest))));
  }
  return RadicalExpr(make_node(Kind::sqrt, a.node_));
}

RadicalExpr cbrt(const RadicalExpr& a) {
  if (is_rat(a.node_)) {
    const mpq_class& q = a.node_->value;
    mpz_class rn, rd;
    const bool num_cube = mpz_root(rn.get_mpz_t(), q.get_num_mpz_t(), 3) != 0;
    const bool den_cube = mpz_root(rd.get_mpz_t(), q.get_den_mpz_t(), 3) != 0;
    if (num_cube && den_cube) return RadicalExpr::rational(mpq_class(rn, rd));
  }
  return RadicalExpr(make_node(Kind::cbrt, a.node_));
}

Complex RadicalExpr::evaluate_raw(int working_digits) const { return eval(node_, working_digits); }

Complex RadicalExpr::evaluate(int digits) const {
  const Complex z = eval(node_, digits + kEvalGuardDigits);
  return {z.re.with_digits(digits), z.im.with_digits(digits)};
}

std::string RadicalExpr::str() const { return render(node_); }

long RadicalExpr::node_count() const { return count(node_); }

namespace {

using R = RadicalExpr;

R q(const mpq_class& v) { return R::rational(v); }

std::vector<R> cubic_monic(const mpq_class& A, const mpq_class& B, const mpq_class& C) {
  const mpq_class p = B - A * A / 3;
  const mpq_class qq = mpq_class(2) * A * A * A / 27 - A * B / 3 + C;
  const R shift = q(-A / 3);
  if (p == 0 && qq == 0) return {shift, shift, shift};
  const R omega = (q(-1) + sqrt(q(-3))) / q(2);
  const R omega2 = (q(-1) - sqrt(q(-3))) / q(2);
  if (p == 0) {
    const R c = cbrt(q(-qq));
    return {shift + c, shift + omega * c, shift + omega2 * c};
  }
  const mpq_class delta = qq * qq / 4 + p * p * p / 27;
  const R root_delta = sqrt(q(delta));
  const R inner = (delta >= 0 && qq > 0) ? q(-qq / 2) - root_delta : q(-qq / 2) + root_delta;
  const R c = cbrt(inner);
  const R p3 = q(p / 3);
  std::vector<R> out;
  for (const R& w : {q(1), omega, omega2}) {
    const R wc = w * c;
    out.push_back(shift + wc - p3 / wc);
  }
  return out;
}

std::vector<R> quartic_monic(const mpq_class& A, const mpq_class& B, const mpq_class& C, const mpq_class& D) {
  const mpq_class a = B - mpq_class(3) * A * A / 8;
  const mpq_class b = C - A * B / 2 + A * A * A / 8;
  const mpq_class c = D - A * C / 4 + A * A * B / 16 - mpq_class(3) * A * A * A * A / 256;
  const R shift = q(-A / 4);
  std::vector<R> out;
  if (b == 0) {
    const R disc = sqrt(q(a * a / 4 - c));
    for (const R& z : {q(-a / 2) + disc, q(-a / 2) - disc}) {
      const R y = sqrt(z);
      out.push_back(shift + y);
      out.push_back(shift - y);
    }
    return out;
  }
  // resolvent 8m^3 + 8a m^2 + (2a^2 - 8c) m - b^2 = 0, made monic
  const R m = cubic_monic(a, a * a / 4 - c, -b * b / 8).front();
  const R s = sqrt(q(2) * m);
  const R base = q(-2 * a) - q(2) * m;
  const R skew = q(2 * b) / s;
  const R r1 = sqrt(base - skew);
  const R r2 = sqrt(base + skew);
  out.push_back(shift + (s + r1) / q(2));
  out.push_back(shift + (s - r1) / q(2));
  out.push_back(shift + (-s + r2) / q(2));
  out.push_back(shift + (-s - r2) / q(2));
  return out;
}

}  // namespace

std::vector<RadicalExpr> solve_by_radicals(const RatPolynomial& p) {
  const long d = p.degree();
  if (d < 1 || d > 4) throw InvalidInput("closed-form roots need degree 1..4, got " + std::to_string(d));
  std::vector<mpq_class> c = p.coefficients();
  const mpq_class lead = c.back();
  for (auto& v : c) v /= lead;
  switch (d) {
    case 1: return {q(-c[0])};
    case 2: {
      const R disc = sqrt(q(c[1] * c[1] / 4 - c[0]));
      return {q(-c[1] / 2) + disc, q(-c[1] / 2) - disc};
    }
    case 3: return cubic_monic(c[2], c[1], c[0]);
    default: return quartic_monic(c[3], c[2], c[1], c[0]);
  }
}

}  // namespace tac
