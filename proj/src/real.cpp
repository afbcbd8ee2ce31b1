#include "tac/real.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <vector>

#include "tac/errors.hpp"

namespace tac {

namespace {

constexpr double kLog2Of10 = 3.3219280948873623;
constexpr mpfr_prec_t kDefaultBits = 64;

mpfr_prec_t wider(const Real& a, const Real& b) { return std::max(a.bits(), b.bits()); }

}  // namespace

mpfr_prec_t digits_to_bits(int digits) {
  if (digits < 1) throw InvalidInput("precision must be at least one decimal digit");
  return static_cast<mpfr_prec_t>(std::ceil(digits * kLog2Of10)) + 2;
}

int bits_to_digits(mpfr_prec_t bits) {
  return static_cast<int>(std::floor(static_cast<double>(bits - 2) / kLog2Of10));
}

Real::Real() { mpfr_init2(v_, kDefaultBits); mpfr_set_zero(v_, 1); }

Real::Real(mpfr_prec_t bits, BitsTag) { mpfr_init2(v_, bits); }

Real::Real(long value, int digits) : Real(digits_to_bits(digits), Real::BitsTag{}) {
  mpfr_set_si(v_, value, MPFR_RNDN);
}

Real::Real(double value, int digits) : Real(digits_to_bits(digits), Real::BitsTag{}) {
  mpfr_set_d(v_, value, MPFR_RNDN);
}

Real::Real(const mpz_class& value, int digits) : Real(digits_to_bits(digits), Real::BitsTag{}) {
  mpfr_set_z(v_, value.get_mpz_t(), MPFR_RNDN);
}

Real::Real(const mpq_class& value, int digits) : Real(digits_to_bits(digits), Real::BitsTag{}) {
  mpfr_set_q(v_, value.get_mpq_t(), MPFR_RNDN);
}

Real Real::from_string(const std::string& text, int digits) {
  Real r(digits_to_bits(digits), Real::BitsTag{});
  if (mpfr_set_str(r.v_, text.c_str(), 10, MPFR_RNDN) != 0)
    throw InvalidInput("not a decimal number: " + text);
  return r;
}

Real Real::pi(int digits) {
  Real r(digits_to_bits(digits), Real::BitsTag{});
  mpfr_const_pi(r.v_, MPFR_RNDN);
  return r;
}

Real::Real(const Real& other) : Real(other.bits(), Real::BitsTag{}) { mpfr_set(v_, other.v_, MPFR_RNDN); }

Real::Real(Real&& other) noexcept {
  v_[0] = other.v_[0];
  other.v_[0]._mpfr_d = nullptr;
}

void Real::ensure_init(mpfr_prec_t bits) {
  if (v_[0]._mpfr_d == nullptr)
    mpfr_init2(v_, bits);
  else if (mpfr_get_prec(v_) != bits)
    mpfr_set_prec(v_, bits);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    ensure_init(other.bits());
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  if (this != &other) std::swap(v_[0], other.v_[0]);
  return *this;
}

Real::~Real() {
  if (v_[0]._mpfr_d != nullptr) mpfr_clear(v_);
}

Real Real::with_digits(int digits) const {
  Real r(digits_to_bits(digits), Real::BitsTag{});
  mpfr_set(r.v_, v_, MPFR_RNDN);
  return r;
}

long Real::exponent() const {
  if (is_zero()) return 0;
  return mpfr_get_exp(v_);
}

std::string Real::str(int sig) const {
  if (mpfr_nan_p(v_)) return "nan";
  if (mpfr_inf_p(v_)) return sign() < 0 ? "-inf" : "inf";
  if (is_zero()) return "0";
  // Rendered by hand so the decimal point never depends on the C locale.
  mpfr_exp_t e10 = 0;
  char* raw = mpfr_get_str(nullptr, &e10, 10, static_cast<size_t>(std::max(sig, 1)), v_, MPFR_RNDN);
  std::string mant(raw);
  mpfr_free_str(raw);
  std::string out;
  if (!mant.empty() && mant[0] == '-') {
    out.push_back('-');
    mant.erase(0, 1);
  }
  // strip trailing zeros of the mantissa
  while (mant.size() > 1 && mant.back() == '0') mant.pop_back();
  const long point = e10;  // value = 0.mant * 10^e10
  const long n = static_cast<long>(mant.size());
  if (point > 0 && point <= 21) {
    if (n <= point) {
      out += mant + std::string(static_cast<size_t>(point - n), '0');
    } else {
      out += mant.substr(0, static_cast<size_t>(point)) + "." + mant.substr(static_cast<size_t>(point));
    }
  } else if (point <= 0 && point > -6) {
    out += "0." + std::string(static_cast<size_t>(-point), '0') + mant;
  } else {
    out += mant.substr(0, 1);
    if (n > 1) out += "." + mant.substr(1);
    out += "e" + std::to_string(point - 1);
  }
  return out;
}

Real& Real::operator+=(const Real& rhs) {
  if (rhs.bits() > bits()) mpfr_prec_round(v_, rhs.bits(), MPFR_RNDN);
  mpfr_add(v_, v_, rhs.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator-=(const Real& rhs) {
  if (rhs.bits() > bits()) mpfr_prec_round(v_, rhs.bits(), MPFR_RNDN);
  mpfr_sub(v_, v_, rhs.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator*=(const Real& rhs) {
  if (rhs.bits() > bits()) mpfr_prec_round(v_, rhs.bits(), MPFR_RNDN);
  mpfr_mul(v_, v_, rhs.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator/=(const Real& rhs) {
  if (rhs.bits() > bits()) mpfr_prec_round(v_, rhs.bits(), MPFR_RNDN);
  mpfr_div(v_, v_, rhs.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator*=(long rhs) {
  mpfr_mul_si(v_, v_, rhs, MPFR_RNDN);
  return *this;
}

Real& Real::operator/=(long rhs) {
  mpfr_div_si(v_, v_, rhs, MPFR_RNDN);
  return *this;
}

Real operator+(const Real& a, const Real& b) {
  Real r(wider(a, b), Real::BitsTag{});
  mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

Real operator-(const Real& a, const Real& b) {
  Real r(wider(a, b), Real::BitsTag{});
  mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

Real operator*(const Real& a, const Real& b) {
  Real r(wider(a, b), Real::BitsTag{});
  mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

Real operator/(const Real& a, const Real& b) {
  Real r(wider(a, b), Real::BitsTag{});
  mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

Real operator*(const Real& a, long b) {
  Real r(a.bits(), Real::BitsTag{});
  mpfr_mul_si(r.v_, a.v_, b, MPFR_RNDN);
  return r;
}

Real operator/(const Real& a, long b) {
  Real r(a.bits(), Real::BitsTag{});
  mpfr_div_si(r.v_, a.v_, b, MPFR_RNDN);
  return r;
}

Real operator+(const Real& a, long b) {
  Real r(a.bits(), Real::BitsTag{});
  mpfr_add_si(r.v_, a.v_, b, MPFR_RNDN);
  return r;
}

Real operator-(const Real& a, long b) {
  Real r(a.bits(), Real::BitsTag{});
  mpfr_sub_si(r.v_, a.v_, b, MPFR_RNDN);
  return r;
}

Real operator-(const Real& a) {
  Real r(a.bits(), Real::BitsTag{});
  mpfr_neg(r.v_, a.v_, MPFR_RNDN);
  return r;
}

std::partial_ordering operator<=>(const Real& a, const Real& b) {
  if (mpfr_unordered_p(a.v_, b.v_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.v_, b.v_);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

#define TAC_UNARY(name, fn)              \
  Real name(const Real& x) {             \
    Real r(x.bits(), Real::BitsTag{});                 \
    fn(r.v_, x.v_, MPFR_RNDN);           \
    return r;                            \
  }

TAC_UNARY(sqrt, mpfr_sqrt)
TAC_UNARY(cbrt, mpfr_cbrt)
TAC_UNARY(abs, mpfr_abs)
TAC_UNARY(sin, mpfr_sin)
TAC_UNARY(cos, mpfr_cos)
TAC_UNARY(exp, mpfr_exp)
TAC_UNARY(log, mpfr_log)

#undef TAC_UNARY

Real atan2(const Real& y, const Real& x) {
  Real r(wider(y, x), Real::BitsTag{});
  mpfr_atan2(r.v_, y.v_, x.v_, MPFR_RNDN);
  return r;
}

Real hypot(const Real& x, const Real& y) {
  Real r(wider(x, y), Real::BitsTag{});
  mpfr_hypot(r.v_, x.v_, y.v_, MPFR_RNDN);
  return r;
}

Real pow(const Real& x, long n) {
  Real r(x.bits(), Real::BitsTag{});
  mpfr_pow_si(r.v_, x.v_, n, MPFR_RNDN);
  return r;
}

std::ostream& operator<<(std::ostream& os, const Real& x) {
  return os << x.str(std::max(6, static_cast<int>(os.precision())));
}

Real pow10_neg(int k, int digits) {
  Real ten(10L, digits);
  return pow(ten, -static_cast<long>(k));
}

// ---------------------------------------------------------------- Complex

Complex Complex::polar(const Real& r, const Real& theta) {
  Real s = theta, c = theta;
  mpfr_sin_cos(s.raw(), c.raw(), theta.raw(), MPFR_RNDN);
  return {r * c, r * s};
}

Complex& Complex::operator+=(const Complex& b) {
  re += b.re;
  im += b.im;
  return *this;
}

Complex& Complex::operator-=(const Complex& b) {
  re -= b.re;
  im -= b.im;
  return *this;
}

Complex& Complex::operator*=(const Complex& b) {
  *this = *this * b;
  return *this;
}

Complex& Complex::operator*=(const Real& b) {
  re *= b;
  im *= b;
  return *this;
}

Complex& Complex::operator/=(const Real& b) {
  re /= b;
  im /= b;
  return *this;
}

Complex operator*(const Complex& a, const Complex& b) {
  const mpfr_prec_t bits = std::max(a.re.bits(), b.re.bits());
  const int d = bits_to_digits(bits);
  Complex r = Complex::zero(d);
  mpfr_fmms(r.re.raw(), a.re.raw(), b.re.raw(), a.im.raw(), b.im.raw(), MPFR_RNDN);
  mpfr_fmma(r.im.raw(), a.re.raw(), b.im.raw(), a.im.raw(), b.re.raw(), MPFR_RNDN);
  return r;
}

Complex operator/(const Complex& a, const Complex& b) {
  const Real den = norm(b);
  Complex num = a * conj(b);
  num.re /= den;
  num.im /= den;
  return num;
}

void Complex::fma(const Complex& b, const Complex& c) {
  if (b.is_zero() || c.is_zero()) return;
  thread_local Real scratch;
  const mpfr_prec_t bits = re.bits();
  if (scratch.bits() != bits) mpfr_set_prec(scratch.raw(), bits);
  mpfr_fmms(scratch.raw(), b.re.raw(), c.re.raw(), b.im.raw(), c.im.raw(), MPFR_RNDN);
  mpfr_add(re.raw(), re.raw(), scratch.raw(), MPFR_RNDN);
  mpfr_fmma(scratch.raw(), b.re.raw(), c.im.raw(), b.im.raw(), c.re.raw(), MPFR_RNDN);
  mpfr_add(im.raw(), im.raw(), scratch.raw(), MPFR_RNDN);
}

Complex conj(const Complex& z) { return {z.re, -z.im}; }

Real abs(const Complex& z) { return hypot(z.re, z.im); }

Real norm(const Complex& z) { return z.re * z.re + z.im * z.im; }

Real arg(const Complex& z) { return atan2(z.im, z.re); }

Complex exp(const Complex& z) { return Complex::polar(exp(z.re), z.im); }

Complex sqrt(const Complex& z) {
  if (z.is_zero()) return z;
  return Complex::polar(sqrt(abs(z)), arg(z) / 2);
}

Complex cbrt(const Complex& z) {
  if (z.is_zero()) return z;
  return Complex::polar(cbrt(abs(z)), arg(z) / 3);
}

std::ostream& operator<<(std::ostream& os, const Complex& z) {
  return os << "(" << z.re << "," << z.im << ")";
}

}  // namespace tac
