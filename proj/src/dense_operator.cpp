#include "tac/dense_operator.hpp"

#include "tac/errors.hpp"

namespace tac {

DenseOperator::DenseOperator(BasisOrdering basis, int digits)
    : basis_(std::move(basis)),
      dim_(basis_.size()),
      digits_(digits),
      scale_(1L, digits),
      data_(static_cast<size_t>(dim_ * dim_), Complex::zero(digits)) {}

DenseOperator DenseOperator::identity(const BasisOrdering& basis, int digits) {
  DenseOperator id(basis, digits);
  for (long k = 0; k < id.dim_; ++k) id.data_[id.index(k, k)].re = Real(1L, digits);
  id.hermitian_ = true;
  return id;
}

bool DenseOperator::is_hermitian(int ulps) const {
  for (long r = 0; r < dim_; ++r) {
    for (long c = r; c < dim_; ++c) {
      const Complex& a = (*this)(r, c);
      const Complex& b = (*this)(c, r);
      const Real dre = abs(a.re - b.re);
      const Real dim = abs(a.im + b.im);
      const Real mag = max(abs(a), abs(b));
      if (mag.is_zero()) continue;
      // one ulp of the larger entry
      Real ulp = Real(static_cast<long>(ulps), digits_) *
                 pow(Real(2L, digits_), mag.exponent() - static_cast<long>(mag.bits()));
      if (dre > ulp || dim > ulp) return false;
    }
  }
  return true;
}

void DenseOperator::mark_hermitian(int ulps) {
  if (!is_hermitian(ulps)) throw InternalConsistencyError("operator flagged Hermitian is not Hermitian");
  hermitian_ = true;
}

const Complex& DenseOperator::at(HalfInt row_m, HalfInt col_m) const {
  return (*this)(basis_.index_of(row_m), basis_.index_of(col_m));
}

DenseOperator DenseOperator::adjoint() const {
  DenseOperator out(basis_, digits_);
  out.scale_ = scale_;
  for (long r = 0; r < dim_; ++r)
    for (long c = 0; c < dim_; ++c) out.data_[out.index(c, r)] = conj(data_[index(r, c)]);
  out.hermitian_ = hermitian_;
  return out;
}

DenseOperator DenseOperator::with_digits(int digits) const {
  DenseOperator out(basis_, digits);
  out.scale_ = scale_.with_digits(digits);
  for (size_t k = 0; k < data_.size(); ++k)
    out.data_[k] = {data_[k].re.with_digits(digits), data_[k].im.with_digits(digits)};
  out.hermitian_ = hermitian_;
  return out;
}

void DenseOperator::require_same_shape(const DenseOperator& other) const {
  if (dim_ != other.dim_)
    throw InvalidInput("operator dimension mismatch: " + std::to_string(dim_) + " vs " +
                       std::to_string(other.dim_));
}

DenseOperator& DenseOperator::operator+=(const DenseOperator& rhs) {
  require_same_shape(rhs);
  for (size_t k = 0; k < data_.size(); ++k) data_[k] += rhs.data_[k];
  hermitian_ = hermitian_ && rhs.hermitian_;
  return *this;
}

DenseOperator& DenseOperator::operator-=(const DenseOperator& rhs) {
  require_same_shape(rhs);
  for (size_t k = 0; k < data_.size(); ++k) data_[k] -= rhs.data_[k];
  hermitian_ = hermitian_ && rhs.hermitian_;
  return *this;
}

DenseOperator& DenseOperator::operator*=(const Complex& s) {
  for (auto& z : data_)
    if (!z.is_zero()) z = z * s;
  hermitian_ = hermitian_ && s.im.is_zero();
  return *this;
}

DenseOperator& DenseOperator::operator*=(const Real& s) {
  for (auto& z : data_)
    if (!z.is_zero()) z *= s;
  return *this;
}

DenseOperator operator*(const DenseOperator& a, const DenseOperator& b) {
  a.require_same_shape(b);
  const long n = a.dim_;
  DenseOperator out(a.basis_, std::max(a.digits_, b.digits_));
  for (long i = 0; i < n; ++i) {
    for (long k = 0; k < n; ++k) {
      const Complex& aik = a.data_[a.index(i, k)];
      if (aik.is_zero()) continue;
      for (long j = 0; j < n; ++j) out.data_[out.index(i, j)].fma(aik, b.data_[b.index(k, j)]);
    }
  }
  return out;
}

DenseOperator DenseOperator::shifted(const Real& lambda) const {
  DenseOperator out = *this;
  for (long k = 0; k < dim_; ++k) out.data_[index(k, k)].re += lambda;
  return out;
}

StateAmplitudes DenseOperator::apply(const StateAmplitudes& v) const {
  if (static_cast<long>(v.size()) != dim_)
    throw InvalidInput("state length " + std::to_string(v.size()) + " does not match operator dimension " +
                       std::to_string(dim_));
  StateAmplitudes out(v.size(), Complex::zero(digits_));
  for (long r = 0; r < dim_; ++r)
    for (long c = 0; c < dim_; ++c) out[static_cast<size_t>(r)].fma(data_[index(r, c)], v[static_cast<size_t>(c)]);
  return out;
}

Real DenseOperator::max_abs() const {
  Real best = Real::zero(digits_);
  for (const auto& z : data_) {
    if (z.is_zero()) continue;
    Real m = abs(z);
    if (m > best) best = std::move(m);
  }
  return best;
}

Complex DenseOperator::trace() const {
  Complex t = Complex::zero(digits_);
  for (long k = 0; k < dim_; ++k) t += data_[index(k, k)];
  return t;
}

Real max_abs_diff(const DenseOperator& a, const DenseOperator& b) { return (a - b).max_abs(); }

DenseOperator anticommutator(const DenseOperator& a, const DenseOperator& b) { return a * b + b * a; }

DenseOperator commutator(const DenseOperator& a, const DenseOperator& b) { return a * b - b * a; }

Complex inner(const StateAmplitudes& u, const StateAmplitudes& v) {
  if (u.size() != v.size()) throw InvalidInput("state length mismatch");
  Complex acc = Complex::zero(u.empty() ? 15 : u.front().digits());
  for (size_t k = 0; k < u.size(); ++k) acc.fma(conj(u[k]), v[k]);
  return acc;
}

}  // namespace tac
