#include "tac/polynomial.hpp"

#include <cctype>

#include "tac/errors.hpp"

namespace tac {

RatPolynomial to_rational(const IntPolynomial& p) {
  std::vector<mpq_class> c;
  c.reserve(p.coefficients().size());
  for (const auto& v : p.coefficients()) c.emplace_back(v);
  return RatPolynomial(std::move(c));
}

IntPolynomial to_integer(const RatPolynomial& p) {
  std::vector<mpz_class> c;
  c.reserve(p.coefficients().size());
  for (const auto& v : p.coefficients()) {
    if (v.get_den() != 1)
      throw InternalConsistencyError("expected integer coefficient, got " + v.get_str());
    c.emplace_back(v.get_num());
  }
  return IntPolynomial(std::move(c));
}

std::pair<RatPolynomial, RatPolynomial> divmod(const RatPolynomial& a, const RatPolynomial& b) {
  if (b.is_zero()) throw InvalidInput("polynomial division by zero");
  std::vector<mpq_class> rem = a.coefficients();
  const long db = b.degree();
  const long da = a.degree();
  if (da < db) return {RatPolynomial{}, a};
  std::vector<mpq_class> quo(static_cast<size_t>(da - db + 1), mpq_class(0));
  const mpq_class& lead = b.leading();
  for (long k = da - db; k >= 0; --k) {
    const mpq_class f = rem[static_cast<size_t>(k + db)] / lead;
    quo[static_cast<size_t>(k)] = f;
    if (f == 0) continue;
    for (long i = 0; i <= db; ++i) rem[static_cast<size_t>(k + i)] -= f * b.coefficients()[static_cast<size_t>(i)];
  }
  rem.resize(static_cast<size_t>(db));
  return {RatPolynomial(std::move(quo)), RatPolynomial(std::move(rem))};
}

RatPolynomial gcd(RatPolynomial a, RatPolynomial b) {
  while (!b.is_zero()) {
    RatPolynomial r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  const mpq_class lead = a.leading();
  return a * (mpq_class(1) / lead);
}

Real evaluate(const IntPolynomial& p, const Real& x) {
  const int d = x.digits();
  Real acc = Real::zero(d);
  for (long k = p.degree(); k >= 0; --k) {
    acc *= x;
    acc += Real(p.coefficients()[static_cast<size_t>(k)], d);
  }
  return acc;
}

Complex evaluate(const IntPolynomial& p, const Complex& x) {
  const int d = x.digits();
  Complex acc = Complex::zero(d);
  for (long k = p.degree(); k >= 0; --k) {
    acc = acc * x;
    acc.re += Real(p.coefficients()[static_cast<size_t>(k)], d);
  }
  return acc;
}

std::pair<Complex, Complex> evaluate_with_derivative(const IntPolynomial& p, const Complex& x) {
  const int d = x.digits();
  Complex val = Complex::zero(d);
  Complex der = Complex::zero(d);
  for (long k = p.degree(); k >= 0; --k) {
    der = der * x + val;
    val = val * x;
    val.re += Real(p.coefficients()[static_cast<size_t>(k)], d);
  }
  return {val, der};
}

std::pair<Real, Real> evaluate_with_derivative(const IntPolynomial& p, const Real& x) {
  const int d = x.digits();
  Real val = Real::zero(d);
  Real der = Real::zero(d);
  for (long k = p.degree(); k >= 0; --k) {
    der = der * x + val;
    val = val * x + Real(p.coefficients()[static_cast<size_t>(k)], d);
  }
  return {val, der};
}

std::string to_string(const IntPolynomial& p, std::string_view var) {
  if (p.is_zero()) return "0";
  std::string out;
  for (long k = p.degree(); k >= 0; --k) {
    const mpz_class& c = p.coefficients()[static_cast<size_t>(k)];
    if (c == 0) continue;
    const bool neg = c < 0;
    const mpz_class mag = abs(c);
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    if (k == 0 || mag != 1) {
      out += mag.get_str();
      if (k > 0) out += "*";
    }
    if (k > 0) {
      out += var;
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

namespace {

class FactoredParser {
 public:
  explicit FactoredParser(std::string_view text) : s_(text) {}

  IntPolynomial parse() {
    IntPolynomial result = IntPolynomial::constant(mpz_class(1));
    skip();
    if (peek() == '-' || peek() == '+') {
      if (get() == '-') result = -result;
    }
    bool any = false;
    while (skip(), pos_ < s_.size()) {
      if (peek() == '*') {
        ++pos_;
        continue;
      }
      result = result * factor();
      any = true;
    }
    if (!any) fail("empty expression");
    return result;
  }

 private:
  IntPolynomial factor() {
    skip();
    IntPolynomial base;
    if (peek() == '(') {
      ++pos_;
      base = sum();
      skip();
      if (get() != ')') fail("expected ')'");
    } else if (peek() == 'l') {
      ++pos_;
      base = IntPolynomial::monomial(1);
    } else if (std::isdigit(static_cast<unsigned char>(peek()))) {
      base = IntPolynomial::constant(integer());
    } else {
      fail("unexpected character");
    }
    skip();
    if (peek() == '^') {
      ++pos_;
      skip();
      base = base.pow(integer().get_si());
    }
    return base;
  }

  IntPolynomial sum() {
    IntPolynomial acc;
    bool first = true;
    while (true) {
      skip();
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = get() == '-' ? -1 : 1;
      } else if (!first) {
        break;
      }
      acc += term() * mpz_class(sign);
      first = false;
    }
    return acc;
  }

  IntPolynomial term() {
    skip();
    mpz_class coeff(1);
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = integer();
      have_coeff = true;
      skip();
      if (peek() == '*') ++pos_, skip();
    }
    long power = 0;
    if (peek() == 'l') {
      ++pos_;
      power = 1;
      skip();
      if (peek() == '^') {
        ++pos_;
        skip();
        power = integer().get_si();
      }
    } else if (!have_coeff) {
      fail("expected a term");
    }
    return IntPolynomial::monomial(power, coeff);
  }

  mpz_class integer() {
    const size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return mpz_class(std::string(s_.substr(start, pos_ - start)));
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  char get() { return pos_ < s_.size() ? s_[pos_++] : '\0'; }
  [[noreturn]] void fail(const std::string& why) const {
    throw InvalidInput("cannot parse polynomial '" + std::string(s_) + "' at offset " + std::to_string(pos_) +
                       ": " + why);
  }

  std::string_view s_;
  size_t pos_ = 0;
};

}  // namespace

IntPolynomial parse_factored(std::string_view text) { return FactoredParser(text).parse(); }

}  // namespace tac
