#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "tac/errors.hpp"
#include "tac/spin_algebra.hpp"
#include "test_util.hpp"

using namespace tac;
using testutil::hi;
using testutil::max_deviation;

TEST_SUITE("spin_algebra") {
  TEST_CASE("half-integer parsing") {
    CHECK(HalfInt::parse("21/2").twice() == 21);
    CHECK(HalfInt::parse("3").twice() == 6);
    CHECK_THROWS_AS(HalfInt::parse("3.5"), InvalidInput);
    CHECK(HalfInt::parse("-1/2").twice() == -1);
    CHECK(HalfInt::parse("4/2").twice() == 4);
    CHECK_THROWS_AS(HalfInt::parse("1/3"), InvalidInput);
    CHECK_THROWS_AS(HalfInt::parse("abc"), InvalidInput);
    CHECK_THROWS_AS(require_spin(HalfInt::parse("-1")), InvalidInput);
    CHECK(HalfInt::from_twice(7).str() == "7/2");
  }

  TEST_CASE("ladder operators") {
    const double r6 = std::sqrt(6.0);
    const LadderPair l2 = build_ladder(hi(4));
    const double super[4] = {2, r6, r6, 2};
    CHECK(max_deviation(l2.plus, [&](long r, long c) { return c == r + 1 ? super[r] : 0.0; }) < 1e-30);
    CHECK(max_deviation(l2.minus, [&](long r, long c) { return r == c + 1 ? super[c] : 0.0; }) < 1e-30);

    const LadderPair half = build_ladder(hi(1));
    CHECK(max_deviation(half.plus, [](long r, long c) { return (r == 0 && c == 1) ? 1.0 : 0.0; }) == 0.0);

    const LadderPair one = build_ladder(hi(2));
    const double r2 = std::sqrt(2.0);
    CHECK(max_deviation(one.plus, [&](long r, long c) { return c == r + 1 ? r2 : 0.0; }) < 1e-30);

    CHECK_THROWS_AS(build_ladder(hi(-2)), InvalidInput);
    CHECK_THROWS_AS(build_ladder(hi(2), 10), InvalidInput);
  }

  TEST_CASE("cartesian components") {
    const CartesianSet s2 = build_cartesian(hi(4));
    CHECK(max_deviation(s2.z, [](long r, long c) { return r == c ? 2.0 - r : 0.0; }) == 0.0);
    const CartesianSet s = build_cartesian(hi(1));
    CHECK(max_deviation(s.x, [](long r, long c) { return r != c ? 0.5 : 0.0; }) == 0.0);
    for (long tj = 1; tj <= 12; ++tj) {
      const CartesianSet c = build_cartesian(hi(tj));
      const DenseOperator lhs = commutator(c.x, c.y);
      const DenseOperator rhs = c.z * Complex::i(kDefaultDigits);
      CHECK(max_abs_diff(lhs, rhs).to_double() < 1e-12);
      CHECK(c.x.hermitian());
      CHECK(c.y.hermitian());
    }
  }

  TEST_CASE("two-axis countertwisting Hamiltonian") {
    const double r6 = std::sqrt(6.0);
    const DenseOperator h2 = build_h_ta(hi(4), 1.0);
    auto eq14 = [&](long r, long c) -> std::complex<double> {
      const double w[3] = {r6, 3, r6};
      if (c == r + 2) return {0, -w[r]};
      if (r == c + 2) return {0, w[c]};
      return 0.0;
    };
    CHECK(max_deviation(h2, eq14) < 1e-30);
    CHECK(h2.hermitian());

    CHECK(build_h_ta(hi(1), 2.5).max_abs().is_zero());

    // j = 3/2: every nonzero entry has modulus sqrt(3)
    const DenseOperator h32 = build_h_ta(hi(3), 1.0);
    for (long r = 0; r < 4; ++r)
      for (long c = 0; c < 4; ++c) {
        const double mod = std::abs(testutil::z(h32(r, c)));
        if (std::abs(r - c) == 2)
          CHECK(mod == doctest::Approx(std::sqrt(3.0)).epsilon(1e-14));
        else
          CHECK(mod == 0.0);
      }

    // entries against the hand-evaluated couplings for a range of spins
    for (long tj = 1; tj <= 24; ++tj) {
      const Eigen::MatrixXcd ref = oracle::h_over_chi(tj);
      const DenseOperator h = build_h_ta(hi(tj), 1.0);
      CHECK(max_deviation(h, [&](long r, long c) { return ref(r, c); }) < 1e-9 * std::max(1.0, ref.cwiseAbs().maxCoeff()));
    }

    // scale enters linearly
    const DenseOperator h3 = build_h_ta(hi(4), 3.0);
    CHECK(max_abs_diff(h3, h2 * Real(3L, kDefaultDigits)).to_double() < 1e-30);
  }

  TEST_CASE("field variant") {
    CHECK(max_abs_diff(build_h_f(hi(6), 1.0, 0.0), build_h_ta(hi(6), 1.0)).is_zero());
    const DenseOperator hf = build_h_f(hi(1), 0.7, 1.0);
    CHECK(max_deviation(hf, [](long r, long c) { return r == c ? (r == 0 ? 0.5 : -0.5) : 0.0; }) == 0.0);
    const DenseOperator h = build_h_f(hi(4), 1.0, 2.0);
    CHECK(anticommutator(h, chiral_operator(hi(4))).max_abs().to_double() < 1e-12);
  }

  TEST_CASE("y rotations") {
    for (long tj : {1L, 2L, 5L, 8L}) {
      const DenseOperator id = wigner_rotation_y(hi(tj), 0.0);
      CHECK(max_abs_diff(id, DenseOperator::identity(id.basis(), kDefaultDigits)).is_zero());
    }
    const Real pi = Real::pi(kDefaultDigits);
    for (long tj : {2L, 3L, 4L, 7L}) {
      const DenseOperator r = wigner_rotation_y(hi(tj), -pi, kDefaultDigits);
      // exp(i pi Jy)|m> = (-1)^(j-m') |m'> with m' = -m; j - m' is the row index
      auto expected = [&](long row, long col) {
        if (row + col != tj) return std::complex<double>(0.0);
        return std::complex<double>(row % 2 == 0 ? 1.0 : -1.0);
      };
      CHECK(max_deviation(r, expected) < 1e-30);
    }
    // unitarity at a generic angle
    const DenseOperator w = wigner_rotation_y(hi(9), 0.731);
    CHECK(max_abs_diff(w.adjoint() * w, DenseOperator::identity(w.basis(), kDefaultDigits)).to_double() < 1e-30);

    // stretched state of j = 2 rotated by exp(i pi Jy/2): amplitudes have the
    // moduli (1/4, 1/2, sqrt6/4, 1/2, 1/4); the odd-m entries come out negative
    const DenseOperator q = wigner_rotation_y(hi(4), -pi / 2L, kDefaultDigits);
    const double expected[5] = {0.25, -0.5, std::sqrt(6.0) / 4, -0.5, 0.25};
    for (long r = 0; r < 5; ++r) {
      CHECK(std::abs(testutil::z(q(r, 0)) - expected[r]) < 1e-30);
      CHECK(std::abs(std::abs(testutil::z(q(r, 0)).real()) - std::abs(expected[r])) < 1e-30);
    }
  }

  TEST_CASE("chiral operator") {
    const DenseOperator r1 = chiral_operator(hi(2));
    const double pattern[3] = {1, -1, 1};
    CHECK(max_deviation(r1, [&](long r, long c) { return r + c == 2 ? pattern[c] : 0.0; }) < 1e-30);
    CHECK(anticommutator(build_h_ta(hi(4), 1.0), chiral_operator(hi(4))).max_abs().to_double() < 1e-12);
    const DenseOperator r72 = chiral_operator(hi(7));
    const DenseOperator id = DenseOperator::identity(r72.basis(), kDefaultDigits);
    CHECK(max_abs_diff(r72 * r72, id * Real(-1L, kDefaultDigits)).to_double() < 1e-30);
    const DenseOperator r3 = chiral_operator(hi(6));
    CHECK(max_abs_diff(r3 * r3, DenseOperator::identity(r3.basis(), kDefaultDigits)).to_double() < 1e-30);
  }
}
