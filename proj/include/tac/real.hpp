#pragma once

// Arbitrary-precision real and complex scalars.
//
// Every Real carries its own MPFR precision. Arithmetic results take the
// larger precision of the operands, so a computation started from inputs at
// p digits stays at p digits without any global precision setting.

#include <mpfr.h>

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>

namespace tac {

/// Decimal digits -> MPFR bits.
mpfr_prec_t digits_to_bits(int digits);
int bits_to_digits(mpfr_prec_t bits);

class Real {
 public:
  Real();  // +0 at 64 bits
  Real(long value, int digits);
  Real(double value, int digits);
  Real(const mpz_class& value, int digits);
  Real(const mpq_class& value, int digits);
  static Real from_string(const std::string& text, int digits);
  static Real pi(int digits);
  static Real zero(int digits) { return Real(0L, digits); }

  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  mpfr_prec_t bits() const { return mpfr_get_prec(v_); }
  int digits() const { return bits_to_digits(bits()); }
  /// Same value rounded to a new precision.
  Real with_digits(int digits) const;

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  /// Power-of-two exponent, as in frexp (value = m * 2^e, 0.5 <= |m| < 1).
  long exponent() const;
  /// Decimal text with `sig` significant digits, locale independent.
  std::string str(int sig) const;

  Real& operator+=(const Real& rhs);
  Real& operator-=(const Real& rhs);
  Real& operator*=(const Real& rhs);
  Real& operator/=(const Real& rhs);
  Real& operator*=(long rhs);
  Real& operator/=(long rhs);

  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);
  friend Real operator*(const Real& a, long b);
  friend Real operator*(long a, const Real& b) { return b * a; }
  friend Real operator/(const Real& a, long b);
  friend Real operator+(const Real& a, long b);
  friend Real operator-(const Real& a, long b);
  friend Real operator-(const Real& a);

  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend std::partial_ordering operator<=>(const Real& a, const Real& b);
  friend bool operator==(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) == 0; }
  friend std::strong_ordering operator<=>(const Real& a, long b) {
    const int c = mpfr_cmp_si(a.v_, b);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend Real sqrt(const Real& x);
  friend Real cbrt(const Real& x);
  friend Real abs(const Real& x);
  friend Real sin(const Real& x);
  friend Real cos(const Real& x);
  friend Real exp(const Real& x);
  friend Real log(const Real& x);
  friend Real atan2(const Real& y, const Real& x);
  friend Real hypot(const Real& x, const Real& y);
  friend Real pow(const Real& x, long n);
  friend Real max(const Real& a, const Real& b) { return a < b ? b : a; }
  friend Real min(const Real& a, const Real& b) { return b < a ? b : a; }

  mpfr_srcptr raw() const { return v_; }
  mpfr_ptr raw() { return v_; }

 private:
  struct BitsTag {};
  Real(mpfr_prec_t bits, BitsTag);
  void ensure_init(mpfr_prec_t bits);

  mpfr_t v_;
};

std::ostream& operator<<(std::ostream& os, const Real& x);

/// 10^(-k) at the given precision.
Real pow10_neg(int k, int digits);

struct Complex {
  Real re;
  Real im;

  Complex() = default;
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
  explicit Complex(Real r) : re(std::move(r)), im(Real::zero(re.digits())) {}
  static Complex zero(int digits) { return {Real::zero(digits), Real::zero(digits)}; }
  static Complex one(int digits) { return {Real(1L, digits), Real::zero(digits)}; }
  static Complex i(int digits) { return {Real::zero(digits), Real(1L, digits)}; }
  /// e^{i theta}
  static Complex polar(const Real& r, const Real& theta);

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  int digits() const { return re.digits(); }

  Complex& operator+=(const Complex& b);
  Complex& operator-=(const Complex& b);
  Complex& operator*=(const Complex& b);
  Complex& operator*=(const Real& b);
  Complex& operator/=(const Real& b);

  friend Complex operator+(Complex a, const Complex& b) { return a += b; }
  friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
  friend Complex operator*(const Complex& a, const Complex& b);
  friend Complex operator*(Complex a, const Real& b) { return a *= b; }
  friend Complex operator*(const Real& b, Complex a) { return a *= b; }
  friend Complex operator/(Complex a, const Real& b) { return a /= b; }
  friend Complex operator/(const Complex& a, const Complex& b);
  friend Complex operator-(const Complex& a) { return {-a.re, -a.im}; }
  friend bool operator==(const Complex& a, const Complex& b) { return a.re == b.re && a.im == b.im; }

  /// a += b * c without temporaries for the product.
  void fma(const Complex& b, const Complex& c);
};

Complex conj(const Complex& z);
Real abs(const Complex& z);
Real norm(const Complex& z);  // |z|^2
Real arg(const Complex& z);
Complex exp(const Complex& z);
/// Principal square root.
Complex sqrt(const Complex& z);
/// Principal cube root.
Complex cbrt(const Complex& z);
std::ostream& operator<<(std::ostream& os, const Complex& z);

}  // namespace tac
