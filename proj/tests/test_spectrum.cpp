#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "tac/errors.hpp"
#include "tac/spectrum.hpp"
#include "test_util.hpp"

using namespace tac;
using testutil::d;
using testutil::hi;

namespace {

std::vector<Real> expanded(const SpectrumReport& r) {
  std::vector<Real> out;
  for (const auto& e : r.eigenvalues)
    for (long k = 0; k < e.multiplicity; ++k) out.push_back(e.value);
  return out;
}

mpq_class trace_h2(long twice_j) {
  mpq_class s = 0;
  for (int b = 0; b < 2; ++b)
    for (const auto& w : oracle::chain_couplings(twice_j, b)) s += 2 * w;
  return s;
}

}  // namespace

TEST_SUITE("spectrum") {
  TEST_CASE("j = 2") {
    const SpectrumReport r = spectrum(hi(4), 34);
    const double r3 = std::sqrt(3.0);
    const double expected[5] = {-2 * r3, -3, 0, 3, 2 * r3};
    REQUIRE(r.eigenvalues.size() == 5);
    for (int k = 0; k < 5; ++k) {
      CHECK(std::abs(d(r.eigenvalues[k].value) - expected[k]) < 1e-15);
      CHECK(r.eigenvalues[k].multiplicity == 1);
    }
    CHECK_FALSE(r.degenerate);
    CHECK(r.pairing_verified);
    CHECK(r.solvability.kind == SolvabilityKind::radicals);
  }

  TEST_CASE("j = 3/2") {
    const SpectrumReport r = spectrum(hi(3), 34);
    REQUIRE(r.eigenvalues.size() == 2);
    CHECK(r.eigenvalues[0].multiplicity == 2);
    CHECK(r.eigenvalues[1].multiplicity == 2);
    CHECK(std::abs(d(r.eigenvalues[1].value) - std::sqrt(3.0)) < 1e-15);
    CHECK(r.degenerate);
    CHECK(r.block_eigenvalues[0].size() == 2);
  }

  TEST_CASE("j = 1/2 and j = 0") {
    const SpectrumReport r = spectrum(hi(1), 34);
    REQUIRE(r.eigenvalues.size() == 1);
    CHECK(r.eigenvalues[0].value.is_zero());
    CHECK(r.eigenvalues[0].multiplicity == 2);
    CHECK(r.degenerate);
    CHECK_THROWS_AS(spectrum(hi(0), 34), InvalidInput);
    CHECK_THROWS_AS(spectrum(hi(4), 10), InvalidInput);
  }

  TEST_CASE("j = 30") {
    const int p = 34;
    const SpectrumReport r = spectrum(hi(60), p);
    CHECK(r.total_multiplicity() == 61);
    CHECK(r.pairing_verified);
    Real s2 = Real::zero(p + 10);
    for (const auto& v : expanded(r)) s2 += v * v;
    const Real exact(trace_h2(60), p + 10);
    CHECK(abs(s2 - exact) / exact < pow10_neg(p - 10, p));
  }

  TEST_CASE("pairing, moments and zero eigenvalue for j up to 30") {
    const int p = 30;
    for (long tj = 1; tj <= 60; ++tj) {
      const SpectrumReport r = spectrum(hi(tj), p);
      INFO("2j = " << tj);
      CHECK(r.total_multiplicity() == tj + 1);
      std::vector<Real> v = expanded(r);
      std::sort(v.begin(), v.end());
      const size_t n = v.size();
      Real worst = Real::zero(p);
      for (size_t k = 0; k < n; ++k) worst = max(worst, abs(v[k] + v[n - 1 - k]) / max(Real(1L, p), abs(v[k])));
      CHECK(worst < pow10_neg(p - 5, p));
      CHECK(r.pairing_verified);

      const bool has_zero = std::any_of(r.eigenvalues.begin(), r.eigenvalues.end(),
                                        [](const Eigenvalue& e) { return e.value.is_zero(); });
      CHECK(has_zero == (char_poly_exact(hi(tj)).coefficient(0) == 0));
      CHECK(r.degenerate == (tj % 2 == 1));

      Real s1 = Real::zero(p), s2 = Real::zero(p);
      for (const auto& x : v) {
        s1 += x;
        s2 += x * x;
      }
      const Real exact(trace_h2(tj), p);
      CHECK(abs(s1) < pow10_neg(p - 10, p) * max(Real(1L, p), exact));
      if (!exact.is_zero()) CHECK(abs(s2 - exact) / exact < pow10_neg(p - 10, p));

      for (const auto& blk : r.block_eigenvalues)
        for (size_t k = 1; k < blk.size(); ++k) CHECK(blk[k - 1] < blk[k]);
    }
  }

  TEST_CASE("radical and numeric routes agree for j up to 17/2") {
    const int p = 40;
    for (long tj = 1; tj <= 17; ++tj) {
      const SpectrumReport a = spectrum(hi(tj), p);
      const SpectrumReport b = spectrum(hi(tj), p, RootPath::numeric);
      REQUIRE(a.eigenvalues.size() == b.eigenvalues.size());
      for (size_t k = 0; k < a.eigenvalues.size(); ++k) {
        CHECK(a.eigenvalues[k].multiplicity == b.eigenvalues[k].multiplicity);
        CHECK(abs(a.eigenvalues[k].value - b.eigenvalues[k].value) <
              pow10_neg(p - 8, p) * max(Real(1L, p), abs(a.eigenvalues[k].value)));
      }
      for (const auto& e : a.eigenvalues) CHECK(e.exactness != Exactness::numeric);
    }
  }

  TEST_CASE("agreement with a double Hermitian eigensolver") {
    for (long tj = 1; tj <= 40; ++tj) {
      const SpectrumReport r = spectrum(hi(tj), 30);
      const std::vector<double> ref = oracle::eigenvalues_double(tj);
      const std::vector<Real> v = expanded(r);
      REQUIRE(v.size() == ref.size());
      double scale = 1;
      for (double x : ref) scale = std::max(scale, std::abs(x));
      for (size_t k = 0; k < v.size(); ++k) CHECK(std::abs(d(v[k]) - ref[k]) < 1e-10 * scale);
    }
  }

  TEST_CASE("altered chains are reported") {
    BlockDecomposition bd = block_decompose(hi(4));
    for (auto& w : bd.couplings[0]) w = -w;
    std::array<IntPolynomial, 2> chains;
    for (int b = 0; b < 2; ++b)
      chains[b] = to_integer(chain_polynomial(bd.couplings[b], static_cast<long>(bd.labels[b].size())));
    CHECK_THROWS_AS(spectrum_from_chains(hi(4), chains, 34), SpectralConsistencyError);
  }

  TEST_CASE("pairing check rejects an unpaired multiset") {
    std::vector<Eigenvalue> ev(2);
    ev[0].value = Real(-1L, 34);
    ev[1].value = Real(2L, 34);
    CHECK_FALSE(verify_pairing(ev, 34));
    ev[1].value = Real(1L, 34);
    CHECK(verify_pairing(ev, 34));
  }
}
