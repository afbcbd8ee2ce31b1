#include "tac/spin_algebra.hpp"

#include <cmath>

#include "tac/errors.hpp"

namespace tac {

namespace {

mpz_class factorial(long n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

// Working digits for the Wigner sum: alternating terms of size up to
// 2^(2j) cancel, so carry that many extra digits.
int wigner_guard_digits(HalfInt j) {
  return 10 + static_cast<int>(std::ceil(static_cast<double>(j.twice()) * std::log10(2.0)));
}

DenseOperator round_to(const DenseOperator& op, int digits) { return op.with_digits(digits); }

}  // namespace

void validate_spin_and_precision(HalfInt j, int digits) {
  require_spin(j);
  if (digits < kMinDigits)
    throw InvalidInput("precision must be at least " + std::to_string(kMinDigits) + " decimal digits");
}

LadderPair build_ladder(HalfInt j, int digits) {
  validate_spin_and_precision(j, digits);
  const BasisOrdering basis(j);
  DenseOperator plus(basis, digits);
  // column m maps to row m+1, which sits one row above
  for (long col = 1; col < basis.size(); ++col) {
    const HalfInt m = basis.label(col);
    plus(col - 1, col).re = sqrt(Real(ladder_factor(j, m), digits));
  }
  DenseOperator minus = plus.adjoint();
  return {std::move(plus), std::move(minus)};
}

CartesianSet build_cartesian(HalfInt j, int digits) {
  auto [plus, minus] = build_ladder(j, digits);
  const BasisOrdering& basis = plus.basis();
  const Real half = Real(1L, digits) / 2;

  DenseOperator x = (plus + minus) * half;
  x.mark_hermitian();
  // 1/(2i) = -i/2
  DenseOperator y = (plus - minus) * Complex(Real::zero(digits), -half);
  y.mark_hermitian();
  DenseOperator z(basis, digits);
  for (long k = 0; k < basis.size(); ++k) z(k, k).re = Real(basis.label(k).twice(), digits) / 2;
  z.mark_hermitian();
  return {std::move(x), std::move(y), std::move(z)};
}

DenseOperator build_h_ta(HalfInt j, const Real& chi, int digits) {
  validate_spin_and_precision(j, digits);
  if (chi.sign() != 0 && !std::isfinite(chi.to_double())) throw InvalidInput("chi must be finite");
  const auto [plus, minus] = build_ladder(j, digits);
  DenseOperator h = plus * plus - minus * minus;
  // chi/(2i) = -i chi/2
  h *= Complex(Real::zero(digits), -(chi.with_digits(digits) / 2));
  h.set_scale(chi.with_digits(digits));
  h.mark_hermitian();
  return h;
}

DenseOperator build_h_ta(HalfInt j, double chi, int digits) {
  if (!std::isfinite(chi)) throw InvalidInput("chi must be finite");
  return build_h_ta(j, Real(chi, digits), digits);
}

DenseOperator build_h_f(HalfInt j, double chi, double omega, int digits) {
  if (!std::isfinite(omega)) throw InvalidInput("omega must be finite");
  DenseOperator h = build_h_ta(j, chi, digits);
  const CartesianSet c = build_cartesian(j, digits);
  Real scale = h.scale();
  h += c.z * Real(omega, digits);
  h.set_scale(std::move(scale));
  h.mark_hermitian();
  return h;
}

DenseOperator wigner_rotation_y(HalfInt j, const Real& beta, int digits) {
  validate_spin_and_precision(j, digits);
  if (!std::isfinite(beta.to_double())) throw InvalidInput("rotation angle must be finite");
  const int work = digits + wigner_guard_digits(j);
  const BasisOrdering basis(j);
  const Real half_beta = beta.with_digits(work) / 2;
  const Real c = cos(half_beta);
  const Real s = sin(half_beta);
  const long two_j = j.twice();

  DenseOperator d(basis, work);
  for (long row = 0; row < basis.size(); ++row) {
    // integer offsets: jpm = j + m', jmm = j - m', likewise for the column
    const long jpm_r = (two_j + basis.label(row).twice()) / 2;
    const long jmm_r = (two_j - basis.label(row).twice()) / 2;
    for (long col = 0; col < basis.size(); ++col) {
      const long jpm_c = (two_j + basis.label(col).twice()) / 2;
      const long jmm_c = (two_j - basis.label(col).twice()) / 2;
      const long mdiff = jmm_c - jmm_r;  // m' - m
      const mpz_class root_arg =
          factorial(jpm_r) * factorial(jmm_r) * factorial(jpm_c) * factorial(jmm_c);
      const Real prefactor = sqrt(Real(root_arg, work));
      Real sum = Real::zero(work);
      const long k_lo = std::max(0L, -mdiff);
      const long k_hi = std::min(jpm_c, jmm_r);
      for (long k = k_lo; k <= k_hi; ++k) {
        const mpz_class den = factorial(jpm_c - k) * factorial(k) * factorial(jmm_r - k) * factorial(k + mdiff);
        Real term = pow(c, two_j - 2 * k - mdiff) * pow(s, 2 * k + mdiff) / Real(den, work);
        if ((k + mdiff) % 2 != 0) term = -term;
        sum += term;
      }
      d(row, col).re = prefactor * sum;
    }
  }
  return round_to(d, digits);
}

DenseOperator wigner_rotation_y(HalfInt j, double beta, int digits) {
  if (!std::isfinite(beta)) throw InvalidInput("rotation angle must be finite");
  return wigner_rotation_y(j, Real(beta, digits + 10), digits);
}

DenseOperator chiral_operator(HalfInt j, int digits) {
  validate_spin_and_precision(j, digits);
  return wigner_rotation_y(j, -Real::pi(digits + wigner_guard_digits(j)), digits);
}

}  // namespace tac
