#pragma once

// Real roots of characteristic polynomials that are lambda^k times a
// polynomial even in lambda. The even part is solved in mu = lambda^2 and
// mapped back to lambda = +-sqrt(mu).

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tac/polynomial.hpp"
#include "tac/radical.hpp"
#include "tac/real.hpp"

namespace tac {

enum class Exactness { exact_rational, radical, numeric };

std::string to_string(Exactness e);

struct Eigenvalue {
  Real value;
  long multiplicity = 1;
  Exactness exactness = Exactness::numeric;
  /// Present for radical and exact rational values.
  std::optional<RadicalExpr> radical_form;
};

/// Square-free decomposition over Q (Yun). Returns primitive integer
/// factors paired with their multiplicity; constant factors are dropped.
std::vector<std::pair<IntPolynomial, long>> squarefree_factors(const IntPolynomial& p);

/// Closed-form roots of q = lambda^(2k) r(lambda^2) with deg r <= 4 after
/// square-free splitting. Each distinct root appears once with its
/// multiplicity. Throws SpectralConsistencyError if some mu root is
/// negative or non-real beyond 10^(-digits+5), InvalidInput if q is not
/// even or a square-free factor has mu-degree above 4.
std::vector<Eigenvalue> roots_even_poly(const IntPolynomial& q, int digits);

/// Same contract for p = lambda^k r(lambda^2) of any degree, with mu roots
/// from Aberth-Ehrlich iteration polished by Newton steps. Every mu root
/// satisfies |r(mu)/r'(mu)| < 10^(-digits+5) max(1, |mu|). Throws
/// NumericFailure when that cannot be reached.
std::vector<Eigenvalue> roots_numeric(const IntPolynomial& p, int digits);

/// All complex roots of a square-free integer polynomial, at `digits`.
std::vector<Complex> aberth_roots(const IntPolynomial& p, int digits);

void sort_ascending(std::vector<Eigenvalue>& values);

}  // namespace tac
