#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace tac {

/// An exact half-integer, stored as twice its value. Used for the spin
/// quantum number j and for magnetic labels m.
class HalfInt {
 public:
  constexpr HalfInt() = default;
  static constexpr HalfInt from_twice(long twice) { return HalfInt(twice); }
  static constexpr HalfInt from_int(long value) { return HalfInt(2 * value); }
  /// Accepts "3", "21/2", "-1/2". Rejects denominators other than 1 and 2.
  static HalfInt parse(std::string_view text);

  constexpr long twice() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }
  double to_double() const { return static_cast<double>(twice_) / 2.0; }
  mpq_class to_rational() const { return mpq_class(twice_, 2); }
  std::string str() const;

  friend constexpr auto operator<=>(const HalfInt&, const HalfInt&) = default;
  friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return HalfInt(a.twice_ + b.twice_); }
  friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return HalfInt(a.twice_ - b.twice_); }
  friend constexpr HalfInt operator-(HalfInt a) { return HalfInt(-a.twice_); }

 private:
  constexpr explicit HalfInt(long twice) : twice_(twice) {}
  long twice_ = 0;
};

/// Throws InvalidInput unless j >= 0.
void require_spin(HalfInt j);

/// 2j + 1
inline long dimension(HalfInt j) { return j.twice() + 1; }

/// True when m is a valid projection label for spin j.
bool is_label_of(HalfInt m, HalfInt j);

/// j(j+1) - m(m+1) = (j - m)(j + m + 1), always an integer for valid labels.
long ladder_factor(HalfInt j, HalfInt m);

/// Basis of the spin-j irrep with m running from +j down to -j; row 0 of
/// every matrix is m = +j.
class BasisOrdering {
 public:
  BasisOrdering() = default;
  explicit BasisOrdering(HalfInt j);

  HalfInt j() const { return j_; }
  long size() const { return static_cast<long>(labels_.size()); }
  const std::vector<HalfInt>& labels() const { return labels_; }
  HalfInt label(long index) const { return labels_.at(static_cast<size_t>(index)); }
  long index_of(HalfInt m) const;

  friend bool operator==(const BasisOrdering& a, const BasisOrdering& b) { return a.j_ == b.j_; }

 private:
  HalfInt j_;
  std::vector<HalfInt> labels_;
};

}  // namespace tac
