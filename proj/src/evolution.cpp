#include "tac/evolution.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "tac/charpoly.hpp"
#include "tac/errors.hpp"

namespace tac {

namespace {

// Digits kept on the time-independent projectors beyond the target.
constexpr int kProjectorExtraDigits = 5;
constexpr int kGrowthSafetyDigits = 10;

Complex rounded(const Complex& z, int digits) { return {z.re.with_digits(digits), z.im.with_digits(digits)}; }

// Largest intermediate magnitude reached while forming the Lagrange
// products, as a base-10 exponent. The group matrix is normal, so the norm
// of a partial product is its largest value over the nodes.
double log10_peak_growth(const std::vector<Real>& nodes) {
  std::vector<double> x;
  for (const auto& v : nodes) x.push_back(v.to_double());
  const size_t n = x.size();
  double peak = 0;
  for (size_t k = 0; k < n; ++k) {
    std::vector<double> acc(n, 0.0);
    for (size_t m = 0; m < n; ++m) {
      if (m == k) continue;
      const double denom = std::log(std::abs(x[k] - x[m]));
      for (size_t i = 0; i < n; ++i) {
        acc[i] += std::log(std::abs(x[i] - x[m])) - denom;
        if (std::isfinite(acc[i])) peak = std::max(peak, acc[i]);
      }
    }
  }
  return peak / std::log(10.0);
}

// out = (m - lambda I) p for size x size row-major blocks; zero entries of
// m are skipped.
std::vector<Complex> shifted_product(const std::vector<Complex>& m, const Real& lambda, const std::vector<Complex>& p,
                                     size_t size, int work) {
  std::vector<Complex> out(size * size, Complex::zero(work));
  for (size_t i = 0; i < size; ++i) {
    for (size_t k = 0; k < size; ++k) {
      const Complex& mik = m[i * size + k];
      if (mik.is_zero()) continue;
      for (size_t c = 0; c < size; ++c) out[i * size + c].fma(mik, p[k * size + c]);
    }
    for (size_t c = 0; c < size; ++c) {
      const Complex& pic = p[i * size + c];
      if (pic.is_zero()) continue;
      out[i * size + c] -= pic * lambda;
    }
  }
  return out;
}

// Newton steps on the exact polynomial q, whose roots near the given
// values are simple.
std::vector<Real> refine_roots(const std::vector<Real>& values, const IntPolynomial& q, int work) {
  std::vector<Real> out;
  const Real tol = pow10_neg(work - 2, work);
  for (const auto& v : values) {
    Real x = v.with_digits(work);
    for (int it = 0; it < 8; ++it) {
      const auto [f, df] = evaluate_with_derivative(q, x);
      if (df.is_zero()) break;
      const Real step = f / df;
      x -= step;
      if (abs(step) <= tol * max(Real(1L, work), abs(x))) break;
    }
    out.push_back(std::move(x));
  }
  return out;
}

IntPolynomial squarefree_part(const IntPolynomial& p) {
  IntPolynomial out(std::vector<mpz_class>{1});
  for (const auto& [factor, mult] : squarefree_factors(p)) out = out * factor;
  return out;
}

DenseOperator dimensionless(const DenseOperator& h) {
  if (h.scale().is_zero()) throw InvalidInput("Hamiltonian scale chi must be nonzero for time evolution");
  const Real inv = Real(1L, h.digits()) / h.scale();
  return h * inv;
}

}  // namespace

Real StateVector::norm() const {
  if (amplitudes.empty()) return Real();
  Real s = Real::zero(amplitudes.front().digits());
  for (const auto& a : amplitudes) s += tac::norm(a);
  return sqrt(s);
}

SpectralInterpolant::SpectralInterpolant(const SpectrumReport& report, const DenseOperator& h, int digits,
                                         InterpolationRoute route)
    : basis_(h.basis()), digits_(digits) {
  validate_spin_and_precision(report.j, digits);
  if (h.dim() != dimension(report.j))
    throw InvalidInput("operator dimension " + std::to_string(h.dim()) + " does not match spin " + report.j.str());
  const DenseOperator given = dimensionless(h);
  std::vector<IntPolynomial> node_polys;

  if (route == InterpolationRoute::per_block) {
    const BlockDecomposition bd = block_decompose(report.j);
    const auto chains = block_char_polys(report.j);
    for (int b = 0; b < 2; ++b) {
      Group g;
      for (const HalfInt m : bd.labels[b]) g.indices.push_back(basis_.index_of(m));
      g.nodes = report.block_eigenvalues[b];
      if (g.indices.empty()) continue;
      if (g.nodes.size() != g.indices.size())
        throw InvalidInput("spectrum report does not match the chain structure of spin " + report.j.str());
      groups_.push_back(std::move(g));
      node_polys.push_back(chains[static_cast<size_t>(b)]);
    }
  } else {
    Group g;
    for (long i = 0; i < h.dim(); ++i) g.indices.push_back(i);
    g.nodes = report.distinct_values();
    groups_.push_back(std::move(g));
    node_polys.push_back(squarefree_part(char_poly_exact(report.j)));
  }

  const Real min_gap = pow10_neg(digits / 2, digits);
  double growth = 0;
  for (const Group& g : groups_) {
    for (size_t k = 1; k < g.nodes.size(); ++k)
      if (g.nodes[k] - g.nodes[k - 1] < min_gap)
        throw IllConditioned("interpolation nodes " + g.nodes[k - 1].str(20) + " and " + g.nodes[k].str(20) +
                             " are closer than 1e-" + std::to_string(digits / 2) +
                             "; raise the precision or use the per-block route");
    growth = std::max(growth, log10_peak_growth(g.nodes));
  }
  guard_ = static_cast<int>(std::ceil(growth)) + kGrowthSafetyDigits;
  const int work = digits + guard_;
  const int keep = digits + kProjectorExtraDigits;

  // H/chi and the nodes are both needed well beyond `digits`: a mismatch
  // between them is amplified by the same growth factor.
  const DenseOperator hh = dimensionless(build_h_ta(report.j, 1.0, work));
  const Real scale = max(Real(1L, digits), given.max_abs());
  if (max_abs_diff(hh.with_digits(digits), given) > pow10_neg(digits - 5, digits) * scale)
    throw InvalidInput("operator is not H_TA/chi for spin " + report.j.str());

  for (size_t gi = 0; gi < groups_.size(); ++gi) {
    Group& g = groups_[gi];
    const size_t s = g.indices.size();
    std::vector<Complex> local(s * s);
    for (size_t a = 0; a < s; ++a)
      for (size_t b = 0; b < s; ++b) {
        const Complex& z = hh(g.indices[a], g.indices[b]);
        local[a * s + b] = Complex(z.re.with_digits(work), z.im.with_digits(work));
      }
    const std::vector<Real> nodes = refine_roots(g.nodes, node_polys[gi], work);
    for (size_t k = 0; k < nodes.size(); ++k) g.nodes[k] = nodes[k].with_digits(keep);
    for (size_t k = 0; k < nodes.size(); ++k) {
      std::vector<Complex> p(s * s, Complex::zero(work));
      for (size_t a = 0; a < s; ++a) p[a * s + a] = Complex::one(work);
      for (size_t n = 0; n < nodes.size(); ++n) {
        if (n == k) continue;
        p = shifted_product(local, nodes[n], p, s, work);
        const Real inv = Real(1L, work) / (nodes[k] - nodes[n]);
        for (auto& z : p) z *= inv;
      }
      for (auto& z : p) z = rounded(z, keep);
      g.projectors.push_back(std::move(p));
    }
  }
}

Propagator SpectralInterpolant::at(const Real& chi_t) const {
  const int keep = digits_ + kProjectorExtraDigits;
  const Real t = chi_t.with_digits(keep);
  const Real one(1L, keep);
  DenseOperator u(basis_, digits_);
  for (const Group& g : groups_) {
    const size_t s = g.indices.size();
    std::vector<Complex> acc(s * s, Complex::zero(keep));
    for (size_t k = 0; k < g.nodes.size(); ++k) {
      const Complex phase = Complex::polar(one, -(t * g.nodes[k].with_digits(keep)));
      const auto& p = g.projectors[k];
      for (size_t e = 0; e < s * s; ++e) acc[e].fma(phase, p[e]);
    }
    for (size_t a = 0; a < s; ++a)
      for (size_t b = 0; b < s; ++b) u(g.indices[a], g.indices[b]) = rounded(acc[a * s + b], digits_);
  }
  return {std::move(u), chi_t.with_digits(digits_), PropagatorMethod::spectral};
}

Propagator propagator_spectral(HalfInt j, const Real& chi_t, const SpectrumReport& report, const DenseOperator& h,
                               int digits, InterpolationRoute route) {
  if (report.j != j) throw InvalidInput("spectrum report is for spin " + report.j.str() + ", not " + j.str());
  return SpectralInterpolant(report, h, digits, route).at(chi_t);
}

Propagator propagator_taylor(const DenseOperator& h, const Real& chi_t, int digits) {
  const long n = h.dim();
  // Halve until the scaled generator has max-norm bound below 1/2.
  const double bound = (dimensionless(h).max_abs() * abs(chi_t)).to_double() * static_cast<double>(n);
  int squarings = 0;
  while (std::ldexp(bound, -squarings) > 0.5) ++squarings;
  const int work = digits + 10 + static_cast<int>(std::ceil(squarings * 0.30103)) + 5;

  const DenseOperator hh = dimensionless(h.with_digits(work));
  Real factor = chi_t.with_digits(work);
  for (int s = 0; s < squarings; ++s) factor /= 2L;
  const DenseOperator a = hh * Complex(Real::zero(work), -factor);

  DenseOperator sum = DenseOperator::identity(h.basis(), work);
  DenseOperator term = sum;
  const Real eps = pow10_neg(work, work);
  for (long k = 1; k < 10000; ++k) {
    term = a * term;
    term *= Real(1L, work) / Real(k, work);
    sum += term;
    if (term.max_abs() < eps) break;
  }
  for (int s = 0; s < squarings; ++s) sum = sum * sum;
  return {sum.with_digits(digits), chi_t.with_digits(digits), PropagatorMethod::taylor_oracle};
}

StateVector coherent_initial_state(HalfInt j, int digits) {
  validate_spin_and_precision(j, digits);
  const Real beta = -Real::pi(digits + 10) / 2L;
  const DenseOperator r = wigner_rotation_y(j, beta, digits);
  StateVector out{j, {}};
  for (long row = 0; row < r.dim(); ++row) out.amplitudes.push_back(r(row, 0));
  return out;
}

Real ObservableSet::variance(int a) const { return sym[a][a] - mean[a] * mean[a]; }

Real ObservableSet::covariance(int a, int b) const { return sym[a][b] - mean[a] * mean[b]; }

Real ObservableSet::casimir() const { return sym[kX][kX] + sym[kY][kY] + sym[kZ][kZ]; }

namespace {

void require_dims(const StateVector& state, const Propagator& u) {
  if (static_cast<long>(state.amplitudes.size()) != u.matrix.dim())
    throw InvalidInput("state has " + std::to_string(state.amplitudes.size()) + " amplitudes, propagator dimension is " +
                       std::to_string(u.matrix.dim()));
}

}  // namespace

ObservableSet heisenberg_expectations(const StateVector& state, const Propagator& u, const CartesianSet& ops) {
  require_dims(state, u);
  if (ops.x.dim() != u.matrix.dim()) throw InvalidInput("spin operators do not match the propagator dimension");
  const int digits = u.matrix.digits();
  const DenseOperator ud = u.matrix.adjoint();
  const StateAmplitudes evolved = u.matrix.apply(state.amplitudes);
  // v[a] = J_a(t) psi with J_a(t) = U^dagger J_a U.
  std::array<StateAmplitudes, 3> v = {ud.apply(ops.x.apply(evolved)), ud.apply(ops.y.apply(evolved)),
                                      ud.apply(ops.z.apply(evolved))};
  ObservableSet obs;
  obs.digits = digits;
  const Real tol = pow10_neg(digits - 5, digits);
  for (int a = 0; a < 3; ++a) {
    const Complex m = inner(state.amplitudes, v[a]);
    if (abs(m.im) > tol * max(Real(1L, digits), abs(m.re)))
      throw InternalConsistencyError("expectation of a Hermitian operator has imaginary part " + m.im.str(10));
    obs.mean[a] = m.re;
  }
  for (int a = 0; a < 3; ++a)
    for (int b = a; b < 3; ++b) {
      obs.sym[a][b] = inner(v[a], v[b]).re;
      obs.sym[b][a] = obs.sym[a][b];
    }
  return obs;
}

ObservableSet heisenberg_expectations(const StateVector& state, const Propagator& u, HalfInt j, int digits) {
  return heisenberg_expectations(state, u, build_cartesian(j, digits));
}

DenseOperator heisenberg_operator(const DenseOperator& op, const Propagator& u) {
  return u.matrix.adjoint() * (op * u.matrix);
}

Complex expectation(const StateVector& state, const Propagator& u, const DenseOperator& op) {
  require_dims(state, u);
  const StateAmplitudes v = u.matrix.adjoint().apply(op.apply(u.matrix.apply(state.amplitudes)));
  return inner(state.amplitudes, v);
}

namespace {

std::optional<Real> wineland(const ObservableSet& obs, HalfInt j, const Real& variance) {
  const Real mean = abs(obs.mean[kX]);
  if (mean <= pow10_neg(obs.digits / 2, obs.digits)) return std::nullopt;
  const Real v = max(variance, Real::zero(obs.digits));
  return sqrt(Real(j.twice(), obs.digits)) * sqrt(v) / mean;
}

}  // namespace

std::optional<Real> xi_y(const ObservableSet& obs, HalfInt j) { return wineland(obs, j, obs.variance(kY)); }

std::optional<Real> xi_z(const ObservableSet& obs, HalfInt j) { return wineland(obs, j, obs.variance(kZ)); }

Real correlation_xz(const ObservableSet& obs) { return obs.sym[kX][kZ] * 2L; }

std::optional<OptimalSqueezing> optimal_xi(const ObservableSet& obs, HalfInt j) {
  const int d = obs.digits;
  const Real vy = obs.variance(kY);
  const Real vz = obs.variance(kZ);
  const Real cyz = obs.covariance(kY, kZ);
  const Real centre = (vy + vz) / 2L;
  const Real half = (vy - vz) / 2L;
  const Real radius = hypot(half, cyz);
  auto xi = wineland(obs, j, centre - radius);
  if (!xi) return std::nullopt;
  Real angle = Real::zero(d);
  if (radius > pow10_neg(d - 5, d) * max(Real(1L, d), abs(centre))) {
    // Variance along phi is centre + radius cos(2 phi - theta).
    const Real pi = Real::pi(d);
    angle = (atan2(cyz, half) + pi) / 2L;
    if (angle > pi / 2L) angle -= pi;
  }
  return OptimalSqueezing{*xi, angle};
}

const std::vector<std::string>& TimeSeries::column_names() {
  static const std::vector<std::string> names = {"chi_t", "jx_mean", "var_jy", "var_jz", "xi_y",
                                                 "xi_z",  "corr_xz", "xi_opt", "opt_angle"};
  return names;
}

std::vector<std::optional<Real>> TimeSeries::column(const std::string& name) const {
  std::vector<std::optional<Real>> out;
  out.reserve(rows.size());
  for (const auto& r : rows) {
    if (name == "chi_t") out.emplace_back(r.chi_t);
    else if (name == "jx_mean") out.emplace_back(r.jx_mean);
    else if (name == "var_jy") out.emplace_back(r.var_jy);
    else if (name == "var_jz") out.emplace_back(r.var_jz);
    else if (name == "xi_y") out.push_back(r.xi_y);
    else if (name == "xi_z") out.push_back(r.xi_z);
    else if (name == "corr_xz") out.emplace_back(r.corr_xz);
    else if (name == "xi_opt") out.push_back(r.xi_opt);
    else if (name == "opt_angle") out.push_back(r.opt_angle);
    else throw InvalidInput("unknown time-series column '" + name + "'");
  }
  return out;
}

TimeSeries time_series(HalfInt j, const Real& chi, const Real& t_max, long steps, int digits) {
  validate_spin_and_precision(j, digits);
  if (j.twice() < 1) throw InvalidInput("time series needs j >= 1/2");
  if (steps < 2) throw InvalidInput("steps must be at least 2");
  if (!(t_max > 0L) || !std::isfinite(t_max.to_double())) throw InvalidInput("t_max must be positive and finite");
  if (chi.is_zero() || !std::isfinite(chi.to_double())) throw InvalidInput("chi must be finite and nonzero");

  const DenseOperator h = build_h_ta(j, 1.0, digits);
  const SpectrumReport report = spectrum(j, digits);
  const SpectralInterpolant interp(report, h, digits);
  const CartesianSet ops = build_cartesian(j, digits);
  const StateVector psi = coherent_initial_state(j, digits);

  TimeSeries series{j, chi, digits, {}};
  series.rows.reserve(static_cast<size_t>(steps));
  const Real end = t_max.with_digits(digits);
  const Real c = chi.with_digits(digits);
  for (long k = 0; k < steps; ++k) {
    const Real t = k + 1 == steps ? end : end * k / (steps - 1);
    const Real chi_t = c * t;
    const Propagator u = interp.at(chi_t);
    const ObservableSet obs = heisenberg_expectations(psi, u, ops);
    TimeSeriesRow row{chi_t, obs.mean[kX], obs.variance(kY), obs.variance(kZ), xi_y(obs, j), xi_z(obs, j),
                      correlation_xz(obs), std::nullopt, std::nullopt};
    if (auto opt = optimal_xi(obs, j)) {
      row.xi_opt = opt->xi;
      row.opt_angle = opt->angle;
    }
    series.rows.push_back(std::move(row));
  }
  return series;
}

}  // namespace tac
