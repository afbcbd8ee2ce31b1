#pragma once

// Time evolution under H_TA and the squeezing observables built on it.
//
// Times are dimensionless (chi t). Spectra are in units of chi, so the
// propagator is exp(-i (chi t) H/chi) and only H/chi = h / h.scale() enters.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "tac/dense_operator.hpp"
#include "tac/spectrum.hpp"
#include "tac/spin_algebra.hpp"

namespace tac {

struct StateVector {
  HalfInt j;
  /// Basis m descending.
  StateAmplitudes amplitudes;

  Real norm() const;
};

enum class PropagatorMethod { spectral, taylor_oracle };

struct Propagator {
  DenseOperator matrix;
  Real chi_t;
  PropagatorMethod method = PropagatorMethod::spectral;
};

enum class InterpolationRoute {
  /// One interpolation per Delta m parity chain, nodes = that chain's
  /// eigenvalues. Default.
  per_block,
  /// One interpolation over the distinct eigenvalues of the whole matrix.
  full,
};

/// Lagrange-Sylvester form of exp(-i chi_t H/chi):
///   U = sum_k exp(-i chi_t lambda_k) prod_{n != k} (H/chi - lambda_n)/(lambda_k - lambda_n)
/// over distinct eigenvalues. The products do not depend on time, so they
/// are formed once and each call to at() only recombines them.
class SpectralInterpolant {
 public:
  /// Throws IllConditioned when two interpolation nodes are closer than
  /// 10^(-digits/2) and InvalidInput when report and h disagree.
  SpectralInterpolant(const SpectrumReport& report, const DenseOperator& h, int digits,
                      InterpolationRoute route = InterpolationRoute::per_block);

  Propagator at(const Real& chi_t) const;

  int digits() const { return digits_; }
  /// Extra working digits used while forming the products.
  int guard_digits() const { return guard_; }

 private:
  struct Group {
    std::vector<long> indices;
    std::vector<Real> nodes;
    /// Row-major size x size projector per node.
    std::vector<std::vector<Complex>> projectors;
  };

  BasisOrdering basis_;
  int digits_ = 0;
  int guard_ = 0;
  std::vector<Group> groups_;
};

Propagator propagator_spectral(HalfInt j, const Real& chi_t, const SpectrumReport& report, const DenseOperator& h,
                               int digits, InterpolationRoute route = InterpolationRoute::per_block);

/// Scaling and squaring of a truncated Taylor series. Independent check on
/// the spectral route, not used by the pipeline.
Propagator propagator_taylor(const DenseOperator& h, const Real& chi_t, int digits);

/// exp(i pi Jy / 2)|j, j>.
StateVector coherent_initial_state(HalfInt j, int digits = kDefaultDigits);

/// Means and symmetrised second moments of (Jx, Jy, Jz) at one time.
struct ObservableSet {
  int digits = 0;
  std::array<Real, 3> mean;
  /// sym[a][b] = <(A B + B A)/2>
  std::array<std::array<Real, 3>, 3> sym;

  Real variance(int a) const;
  Real covariance(int a, int b) const;
  /// <Jx^2 + Jy^2 + Jz^2>
  Real casimir() const;
};

inline constexpr int kX = 0;
inline constexpr int kY = 1;
inline constexpr int kZ = 2;

/// O(t) = U^dagger O U for O in {Jx, Jy, Jz}, each applied to the fixed
/// initial state. Throws InvalidInput on dimension mismatch and
/// InternalConsistencyError if a mean has an imaginary part above
/// 10^(-digits+5).
ObservableSet heisenberg_expectations(const StateVector& state, const Propagator& u, const CartesianSet& ops);
ObservableSet heisenberg_expectations(const StateVector& state, const Propagator& u, HalfInt j, int digits);

/// U^dagger O U
DenseOperator heisenberg_operator(const DenseOperator& op, const Propagator& u);
/// <psi| U^dagger O U |psi>
Complex expectation(const StateVector& state, const Propagator& u, const DenseOperator& op);

/// sqrt(2j) Delta J / |<Jx>|; empty when |<Jx>| <= 10^(-digits/2).
std::optional<Real> xi_y(const ObservableSet& obs, HalfInt j);
std::optional<Real> xi_z(const ObservableSet& obs, HalfInt j);

/// <Jx Jz + Jz Jx>
Real correlation_xz(const ObservableSet& obs);

struct OptimalSqueezing {
  Real xi;
  /// phi of the quadrature cos(phi) Jy + sin(phi) Jz, in (-pi/2, pi/2].
  /// 0 when the transverse covariance is isotropic.
  Real angle;
};

std::optional<OptimalSqueezing> optimal_xi(const ObservableSet& obs, HalfInt j);

struct TimeSeriesRow {
  Real chi_t;
  Real jx_mean;
  Real var_jy;
  Real var_jz;
  std::optional<Real> xi_y;
  std::optional<Real> xi_z;
  Real corr_xz;
  std::optional<Real> xi_opt;
  std::optional<Real> opt_angle;
};

struct TimeSeries {
  HalfInt j;
  Real chi;
  int digits = 0;
  std::vector<TimeSeriesRow> rows;

  static const std::vector<std::string>& column_names();
  /// Values of a named column; empty entries are gaps.
  std::vector<std::optional<Real>> column(const std::string& name) const;
};

/// Uniform grid 0 = t_0 < ... < t_{steps-1} = t_max; rows carry chi t.
/// Every row gets its own propagator, so errors do not accumulate along
/// the grid.
TimeSeries time_series(HalfInt j, const Real& chi, const Real& t_max, long steps, int digits = kDefaultDigits);

}  // namespace tac
