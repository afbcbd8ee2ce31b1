#pragma once

#include <vector>

#include "tac/half_int.hpp"
#include "tac/real.hpp"

namespace tac {

using StateAmplitudes = std::vector<Complex>;

/// Square complex matrix in the |j,m> basis (m descending), every entry at
/// a fixed decimal precision.
///
/// `scale` records the energy scale (chi) an operator was built with so
/// that spectra computed in units of chi can be mapped back onto it. It is
/// 1 for dimensionless operators such as J_x or rotations.
class DenseOperator {
 public:
  DenseOperator() = default;
  DenseOperator(BasisOrdering basis, int digits);
  static DenseOperator identity(const BasisOrdering& basis, int digits);

  long dim() const { return dim_; }
  const BasisOrdering& basis() const { return basis_; }
  int digits() const { return digits_; }

  const Real& scale() const { return scale_; }
  void set_scale(Real s) { scale_ = std::move(s); }

  bool hermitian() const { return hermitian_; }
  /// Sets the Hermitian flag after checking entry(a,b) == conj(entry(b,a))
  /// to within `ulps` units in the last place. Throws
  /// InternalConsistencyError if the check fails.
  void mark_hermitian(int ulps = 1);
  bool is_hermitian(int ulps = 1) const;

  const Complex& operator()(long row, long col) const { return data_[index(row, col)]; }
  Complex& operator()(long row, long col) {
    hermitian_ = false;
    return data_[index(row, col)];
  }
  /// Entry <row_m| O |col_m>.
  const Complex& at(HalfInt row_m, HalfInt col_m) const;

  DenseOperator adjoint() const;
  DenseOperator with_digits(int digits) const;

  DenseOperator& operator+=(const DenseOperator& rhs);
  DenseOperator& operator-=(const DenseOperator& rhs);
  DenseOperator& operator*=(const Complex& s);
  DenseOperator& operator*=(const Real& s);

  friend DenseOperator operator+(DenseOperator a, const DenseOperator& b) { return a += b; }
  friend DenseOperator operator-(DenseOperator a, const DenseOperator& b) { return a -= b; }
  friend DenseOperator operator*(DenseOperator a, const Complex& s) { return a *= s; }
  friend DenseOperator operator*(const Complex& s, DenseOperator a) { return a *= s; }
  friend DenseOperator operator*(DenseOperator a, const Real& s) { return a *= s; }
  friend DenseOperator operator*(const Real& s, DenseOperator a) { return a *= s; }
  /// Matrix product; zero entries of the left factor are skipped.
  friend DenseOperator operator*(const DenseOperator& a, const DenseOperator& b);

  /// A + lambda * I
  DenseOperator shifted(const Real& lambda) const;
  StateAmplitudes apply(const StateAmplitudes& v) const;

  /// max_ab |entry(a,b)|
  Real max_abs() const;
  Complex trace() const;

 private:
  size_t index(long row, long col) const {
    return static_cast<size_t>(row) * static_cast<size_t>(dim_) + static_cast<size_t>(col);
  }
  void require_same_shape(const DenseOperator& other) const;

  BasisOrdering basis_;
  long dim_ = 0;
  int digits_ = 0;
  Real scale_;
  bool hermitian_ = false;
  std::vector<Complex> data_;
};

Real max_abs_diff(const DenseOperator& a, const DenseOperator& b);
/// A B + B A
DenseOperator anticommutator(const DenseOperator& a, const DenseOperator& b);
/// A B - B A
DenseOperator commutator(const DenseOperator& a, const DenseOperator& b);

/// <u|v>
Complex inner(const StateAmplitudes& u, const StateAmplitudes& v);

}  // namespace tac
