#pragma once

#include <Eigen/Dense>
#include <memory>
#include <mutex>

#include "css/grid.hpp"
#include "css/state.hpp"

namespace css {

using Mat = Eigen::MatrixXd;

/// Smooth Littlewood-Paley profile: 1 on [0,1], 0 on [2,inf), C^3 monotone
/// in between (polynomial smoothstep; any such bump is admissible).
double lp_window(double x);
double lp_window_d1(double x);
double lp_window_d2(double x);
double lp_window_d3(double x);

struct BandCutoff {
  enum class Kind { Low, High, Band } kind;
  double lambda = 0.0;  // outer scale
  double mu = 0.0;      // inner scale (Band only)
  static BandCutoff low(double lam) { return {Kind::Low, lam, 0.0}; }
  static BandCutoff high(double lam) { return {Kind::High, lam, 0.0}; }
  static BandCutoff band(double mu, double lam) { return {Kind::Band, lam, mu}; }
};

/// Order-|m| discrete Hankel transform on a BesselZero grid, diagonalizing
/// the equivariant Laplacian L_m = d_rr + d_r/r - m^2/r^2 as -rho^2.
///
/// The transform tables are the polar (Newton-Schulz) orthogonalization of
/// the symmetric quadrature core, so inverse(forward) and the weighted
/// Parseval identity hold to round-off; this is what makes the free
/// propagator exactly unitary in the discrete charge.
class SpectralPlan {
 public:
  SpectralPlan(GridPtr grid, int m);

  int m() const { return m_; }
  const GridPtr& grid() const { return grid_; }
  const Vec& rho() const { return rho_; }
  /// Dual quadrature weights on the frequency grid (for \int ... rho drho).
  const Vec& dual_weights() const { return wh_; }
  /// Physical-side DHT weights the transform is built from (raw, no moment fix).
  const Vec& dht_weights() const { return w_; }
  const Mat& forward_table() const { return fwd_; }
  const Mat& inverse_table() const { return inv_; }

  CVec forward(const CVec& u) const;
  CVec inverse(const CVec& spec) const;
  Vec forward(const Vec& u) const;
  Vec inverse(const Vec& spec) const;

  /// d/dr by differentiating the Fourier-Bessel representation. Exact for
  /// band-limited Dirichlet-compatible profiles; do not use on slowly
  /// decaying tails (u(rmax) != 0 rings).
  CVec derivative(const CVec& u) const;
  Vec derivative(const Vec& u) const;

  /// u(0) from the spectrum: nonzero only for m = 0.
  Complex eval_at_zero(const CVec& spec) const;

  double rho_max() const { return rho_(rho_.size() - 1); }

 private:
  const Mat& deriv_kernel() const;  // lazy rho->r synthesis of J'_m
  GridPtr grid_;
  int m_;
  Vec rho_, w_, wh_;
  Mat fwd_, inv_;
  mutable std::mutex lazy_mu_;
  mutable std::unique_ptr<Mat> deriv_;
};

using PlanPtr = std::shared_ptr<const SpectralPlan>;

/// Build (and memoize) a plan for the grid; requires a BesselZero grid of
/// order |m|.
PlanPtr build_spectral_plan(const GridPtr& grid, int m);

/// Convenience: memoized bessel-zero grid + plan for (n, rmax, m).
std::pair<GridPtr, PlanPtr> shared_plan(int n, double rmax, int m);

CVec hankel_forward(const CVec& u, const SpectralPlan& plan);
CVec hankel_inverse(const CVec& spec, const SpectralPlan& plan);

/// Littlewood-Paley projector: spectrum multiplied by the requested window.
EquivariantState band_project(const EquivariantState& state, const SpectralPlan& plan,
                              const BandCutoff& cutoff);

/// Exact spectral flow of i u_t + L_m u = 0: spectrum *= exp(-i rho^2 dt).
EquivariantState free_propagate(const EquivariantState& state, double dt,
                                const SpectralPlan& plan);

/// Charge fraction of the state above `rho_ref` (Littlewood-Paley tail).
double lp_tail_fraction(const EquivariantState& state, const SpectralPlan& plan,
                        double rho_ref);

/// Exact-kernel cumulative integrator C(r) = \int_0^r f(s) s ds for smooth
/// decaying f sampled on a BesselZero grid: order-0 Fourier-Bessel synthesis
/// with the closed-form J_1 antiderivative. Machine accurate for band-limited
/// f; used where panel rules are not accurate enough.
class SpectralCumulative {
 public:
  explicit SpectralCumulative(GridPtr grid);
  /// C at the nodes; `at_rmax` (if non-null) receives C(rmax).
  Vec apply(const Vec& f, double* at_rmax = nullptr) const;

 private:
  GridPtr grid_;
  Mat analysis_;    // f samples -> order-0 coefficients
  Mat synthesis_;   // coefficients -> C(r_i)
  Eigen::VectorXd edge_;  // coefficients -> C(rmax)
};

}  // namespace css
