#pragma once

// Matrix representations of angular momentum operators, the two-axis
// countertwisting Hamiltonian and y-rotations in the |j,m> basis with m
// running from +j down to -j.

#include "tac/dense_operator.hpp"
#include "tac/half_int.hpp"

namespace tac {

inline constexpr int kDefaultDigits = 34;
inline constexpr int kMinDigits = 15;

/// Throws InvalidInput for j < 0 or digits < kMinDigits.
void validate_spin_and_precision(HalfInt j, int digits);

struct LadderPair {
  DenseOperator plus;
  DenseOperator minus;
};

/// J+ and J- with <j,m+1|J+|j,m> = sqrt(j(j+1) - m(m+1)); J- = J+^dagger.
LadderPair build_ladder(HalfInt j, int digits = kDefaultDigits);

struct CartesianSet {
  DenseOperator x;
  DenseOperator y;
  DenseOperator z;
};

/// Jx = (J+ + J-)/2, Jy = (J+ - J-)/(2i), Jz = diag(j, ..., -j).
CartesianSet build_cartesian(HalfInt j, int digits = kDefaultDigits);

/// H = chi/(2i) (J+^2 - J-^2). Hermitian, purely imaginary, nonzero only
/// for |m - m'| = 2. `scale()` of the result is chi.
DenseOperator build_h_ta(HalfInt j, double chi, int digits = kDefaultDigits);
DenseOperator build_h_ta(HalfInt j, const Real& chi, int digits);

/// H_TA + omega Jz.
DenseOperator build_h_f(HalfInt j, double chi, double omega, int digits = kDefaultDigits);

/// exp(-i beta Jy) from the Wigner small-d sum formula.
DenseOperator wigner_rotation_y(HalfInt j, double beta, int digits = kDefaultDigits);
DenseOperator wigner_rotation_y(HalfInt j, const Real& beta, int digits);

/// exp(i pi Jy): anticommutes with H_TA and H_f.
DenseOperator chiral_operator(HalfInt j, int digits = kDefaultDigits);

}  // namespace tac
