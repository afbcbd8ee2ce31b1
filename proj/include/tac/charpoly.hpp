#pragma once

// Exact characteristic polynomials of H_TA/chi.
//
// H_TA only couples m to m +- 2, so in the |j,m> basis it splits into two
// chains (m = j, j-2, ... and m = j-1, j-3, ...). Each chain is a Hermitian
// tridiagonal matrix with zero diagonal whose characteristic polynomial
// follows from the squared couplings alone. Nothing here builds a dense
// complex matrix.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "tac/half_int.hpp"
#include "tac/polynomial.hpp"

namespace tac {

struct BlockDecomposition {
  HalfInt j;
  /// Chain labels, m descending within each chain. Block 0 contains m = 0 for
  /// integer j and starts at m = j for half-integer j.
  std::array<std::vector<HalfInt>, 2> labels;
  /// couplings[b][k] = |<m_k | H/chi | m_{k+1}>|^2 for consecutive chain labels.
  std::array<std::vector<mpq_class>, 2> couplings;
};

/// w for the link m -> m + 2: (1/4) (j(j+1) - m(m+1)) (j(j+1) - (m+1)(m+2)).
mpq_class squared_coupling(HalfInt j, HalfInt m);

BlockDecomposition block_decompose(HalfInt j);

/// det(lambda I - T) for the zero-diagonal tridiagonal chain with the given
/// squared couplings (size = couplings + 1, or 0 for an empty chain).
RatPolynomial chain_polynomial(const std::vector<mpq_class>& couplings, long size);

/// Monic det(lambda I - T_b) for both chains, as integer polynomials.
std::array<IntPolynomial, 2> block_char_polys(HalfInt j);

/// det(H_TA/chi - lambda I); leading coefficient (-1)^(2j+1).
IntPolynomial char_poly_exact(HalfInt j);

/// Resultant over the integers by the subresultant PRS.
mpz_class resultant(const IntPolynomial& a, const IntPolynomial& b);
/// (-1)^(n(n-1)/2) Res(p, p') / lc(p). Throws InvalidInput for degree < 1.
mpz_class discriminant(const IntPolynomial& p);

/// Number of distinct real roots, by a Sturm sequence over Q.
long distinct_real_root_count(const IntPolynomial& p);

struct DegeneracyReport {
  HalfInt j;
  mpz_class discriminant_full;
  /// Per-chain discriminants (1 for chains of size <= 1).
  std::array<mpz_class, 2> discriminant_block;
  bool degenerate = false;
};

DegeneracyReport degeneracy_report(HalfInt j);

enum class SolvabilityKind { trivial_zero, radicals, hypergeometric, numeric_only };

std::string to_string(SolvabilityKind kind);

struct SolvabilityClass {
  SolvabilityKind kind = SolvabilityKind::trivial_zero;
  /// Largest degree in mu = lambda^2 over both chains after removing
  /// factors of lambda.
  long mu_degree = 0;
};

SolvabilityClass classify_solvability(HalfInt j);

/// One row of the published table of characteristic polynomials.
struct Table1Entry {
  HalfInt j;
  /// Transcription of the printed factored form.
  std::string literal_text;
  /// Expansion of literal_text; empty when the printed text does not parse.
  std::optional<IntPolynomial> literal;
  /// Present only for rows whose printed form is known to be wrong.
  std::optional<std::string> corrected_text;
  std::optional<IntPolynomial> corrected;
  bool questionable = false;
  /// The table's "Degenerate" column.
  bool degenerate_column = false;
};

/// Spins covered by the table: 1/2, 1, ..., 11.
std::vector<HalfInt> table1_spins();
/// Throws NotAvailable for spins outside the table.
Table1Entry table1_reference(HalfInt j);

}  // namespace tac
