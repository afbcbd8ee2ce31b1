#pragma once

#include <array>
#include <vector>

#include "tac/charpoly.hpp"
#include "tac/half_int.hpp"
#include "tac/roots.hpp"

namespace tac {

enum class RootPath {
  /// Closed forms when every mu-degree is at most 4, numeric otherwise.
  automatic,
  numeric,
};

/// Spectrum of H_TA/chi.
struct SpectrumReport {
  HalfInt j;
  int digits = 0;
  /// Distinct eigenvalues, ascending, with multiplicities summing to 2j+1.
  std::vector<Eigenvalue> eigenvalues;
  /// Distinct eigenvalues of each chain (see BlockDecomposition), ascending.
  /// Within a chain every eigenvalue is simple.
  std::array<std::vector<Real>, 2> block_eigenvalues;
  bool degenerate = false;
  SolvabilityClass solvability;
  bool pairing_verified = false;

  long total_multiplicity() const;
  /// Distinct values only.
  std::vector<Real> distinct_values() const;
};

SpectrumReport spectrum(HalfInt j, int digits, RootPath path = RootPath::automatic);

/// Same, starting from the monic chain polynomials det(lambda I - T_b).
/// Lets callers feed deliberately altered chains.
SpectrumReport spectrum_from_chains(HalfInt j, const std::array<IntPolynomial, 2>& chains, int digits,
                                    RootPath path = RootPath::automatic);

/// True when the multiset is invariant under lambda -> -lambda to
/// 10^(-digits+5) max(1, |lambda|).
bool verify_pairing(const std::vector<Eigenvalue>& eigenvalues, int digits);

}  // namespace tac
