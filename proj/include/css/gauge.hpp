#pragma once

#include <memory>

#include "css/spectral.hpp"
#include "css/state.hpp"

namespace css {

enum class CumulativeMethod { Trapezoid, Panel4, Panel6, Spectral };

struct GaugeOptions {
  CumulativeMethod method = CumulativeMethod::Panel4;
  /// Required when method == Spectral (order-0 cumulative on the state's grid).
  std::shared_ptr<const SpectralCumulative> spectral;
};

/// Coulomb-gauge potentials reconstructed from |u|^2. A_r = 0 identically
/// under the ansatz and is not stored.
struct GaugeFields {
  Vec a_theta;    // A_theta(r_i) = -1/2 \int_0^r |u|^2 s ds
  Vec a0;         // A_0(r_i) = -\int_r^rmax (m + A_theta)/s |u|^2 ds, A_0(rmax) = 0
  Vec potential;  // V = 2m A_theta/r^2 + A_0 + A_theta^2/r^2 - g|u|^2
};

Vec compute_a_theta(const EquivariantState& state, const GaugeOptions& opts = {});
Vec compute_a0(const EquivariantState& state, const Vec& a_theta,
               const GaugeOptions& opts = {});
Vec compute_potential(const EquivariantState& state, const Vec& a_theta, const Vec& a0);
GaugeFields make_gauge_fields(const EquivariantState& state, const GaugeOptions& opts = {});

/// How d/dr u is taken by the observables that need it.
struct DerivativeMethod {
  PlanPtr plan;      // spectral differentiation when set (band-limited states)
  int fd_stencil = 7;
  static DerivativeMethod fd(int stencil = 7) { return {nullptr, stencil}; }
  static DerivativeMethod spectral(PlanPtr p) { return {std::move(p), 7}; }
};

CVec radial_derivative(const EquivariantState& state, const DerivativeMethod& dm = {});

struct CovariantFactors {
  CVec dr_u;            // D_r phi radial factor (A_r = 0)
  CVec dtheta_over_r;   // (1/r) D_theta phi radial factor = i (m + A_theta) u / r
};

CovariantFactors covariant_factors(const EquivariantState& state, const GaugeFields& fields,
                                   const DerivativeMethod& dm = {});

/// Radial factor of D_+ phi: d_r u - (m + A_theta) u / r. Vanishes on
/// self-dual (g = 1, zero energy) states.
CVec d_plus(const EquivariantState& state, const GaugeFields& fields,
            const DerivativeMethod& dm = {});

/// Max over nodes of |A_theta - rho^{-1} d_rho f-hat| mismatch for the
/// order-0 spectral relation, on the decaying part A_theta - A_theta(rmax).
/// Returns the residual relative to the band maximum of |A_theta-hat|.
/// Requires m = 0 density handling only (A_theta is radial for every state);
/// `plan0` must be an order-0 plan on the state's grid.
double spectral_relation_residual(const EquivariantState& state, const SpectralPlan& plan0,
                                  const GaugeOptions& opts = {});

}  // namespace css
