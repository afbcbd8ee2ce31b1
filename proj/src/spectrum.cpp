#include "tac/spectrum.hpp"

#include <algorithm>

#include "tac/errors.hpp"
#include "tac/spin_algebra.hpp"

namespace tac {

long SpectrumReport::total_multiplicity() const {
  long n = 0;
  for (const auto& e : eigenvalues) n += e.multiplicity;
  return n;
}

std::vector<Real> SpectrumReport::distinct_values() const {
  std::vector<Real> out;
  out.reserve(eigenvalues.size());
  for (const auto& e : eigenvalues) out.push_back(e.value);
  return out;
}

bool verify_pairing(const std::vector<Eigenvalue>& eigenvalues, int digits) {
  const size_t n = eigenvalues.size();
  const Real eps = pow10_neg(digits - 5, digits);
  const Real one(1L, digits);
  for (size_t i = 0; i < n; ++i) {
    const Eigenvalue& a = eigenvalues[i];
    const Eigenvalue& b = eigenvalues[n - 1 - i];
    if (a.multiplicity != b.multiplicity) return false;
    if (abs(a.value + b.value) > eps * max(one, abs(a.value))) return false;
  }
  return true;
}

namespace {

IntPolynomial integral_quotient(const IntPolynomial& a, const RatPolynomial& g) {
  auto [q, r] = divmod(to_rational(a), g);
  if (!r.is_zero()) throw InternalConsistencyError("chain polynomial not divisible by the common factor");
  return to_integer(q);
}

}  // namespace

SpectrumReport spectrum(HalfInt j, int digits, RootPath path) {
  validate_spin_and_precision(j, digits);
  if (j.twice() < 1) throw InvalidInput("spectrum needs j >= 1/2");
  return spectrum_from_chains(j, block_char_polys(j), digits, path);
}

SpectrumReport spectrum_from_chains(HalfInt j, const std::array<IntPolynomial, 2>& chains, int digits,
                                    RootPath path) {
  validate_spin_and_precision(j, digits);

  SpectrumReport report;
  report.j = j;
  report.digits = digits;
  report.solvability = classify_solvability(j);
  const bool closed_form = path == RootPath::automatic && report.solvability.mu_degree <= 4;
  auto solve = [&](const IntPolynomial& p) {
    if (p.degree() < 1) return std::vector<Eigenvalue>{};
    return closed_form ? roots_even_poly(p, digits) : roots_numeric(p, digits);
  };

  // Both chains are monic; the common factor carries every eigenvalue
  // shared between them.
  const RatPolynomial common = gcd(to_rational(chains[0]), to_rational(chains[1]));
  const IntPolynomial shared = to_integer(common);
  const std::array<IntPolynomial, 2> own = {integral_quotient(chains[0], common),
                                            integral_quotient(chains[1], common)};

  std::vector<Eigenvalue> shared_roots = solve(shared);
  for (auto& e : shared_roots) {
    if (e.multiplicity != 1) throw InternalConsistencyError("repeated eigenvalue inside a single chain");
    e.multiplicity = 2;
    report.eigenvalues.push_back(e);
  }
  for (int b = 0; b < 2; ++b) {
    for (const auto& e : shared_roots) report.block_eigenvalues[b].push_back(e.value);
    for (auto& e : solve(own[b])) {
      if (e.multiplicity != 1) throw InternalConsistencyError("repeated eigenvalue inside a single chain");
      report.block_eigenvalues[b].push_back(e.value);
      report.eigenvalues.push_back(std::move(e));
    }
    std::sort(report.block_eigenvalues[b].begin(), report.block_eigenvalues[b].end());
  }
  sort_ascending(report.eigenvalues);

  if (report.total_multiplicity() != dimension(j))
    throw InternalConsistencyError("eigenvalue multiplicities do not add up to 2j+1");
  for (const auto& e : report.eigenvalues) report.degenerate = report.degenerate || e.multiplicity > 1;
  report.pairing_verified = verify_pairing(report.eigenvalues, digits);
  return report;
}

}  // namespace tac
