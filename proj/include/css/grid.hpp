#pragma once

#include <Eigen/Dense>
#include <complex>
#include <memory>
#include <vector>

#include "css/errors.hpp"

namespace css {

using Vec = Eigen::ArrayXd;
using CVec = Eigen::ArrayXcd;
using Complex = std::complex<double>;

enum class GridKind { UniformMidpoint, BesselZero };

/// Order of the panel rule used by cumulative (and some ad hoc) quadratures.
enum class QuadOrder { Trapezoid = 2, Panel4 = 4, Panel6 = 6 };

/// Radial collocation grid on (0, rmax] with quadrature weights for
/// integrals against the planar radial measure r dr.
///
/// BesselZero grids place nodes at the scaled zeros of J_|m| and carry
/// spectral-grade weights (classical DHT weights with a boundary-localized
/// moment fix so that sum(w) = rmax^2/2 and r^k, k <= 3, integrate exactly).
/// Those weights assume the integrand vanishes like r^{2|m|} at the origin,
/// which every equivariant density does; `cubic_weights()` is the
/// general-purpose composite rule without that assumption.
class RadialGrid {
 public:
  static std::shared_ptr<const RadialGrid> make(int n, double rmax, GridKind kind, int m = 0);

  GridKind kind() const { return kind_; }
  int n() const { return n_; }
  double rmax() const { return rmax_; }
  int bessel_order() const { return border_; }
  const Vec& nodes() const { return r_; }
  const Vec& weights() const { return w_; }
  const Vec& cubic_weights() const { return wc_; }
  /// For BesselZero grids: the n+1 zeros of J_|m| used to place nodes.
  const std::vector<double>& bessel_zeros() const { return zeros_; }

  bool same_layout(const RadialGrid& o) const {
    return kind_ == o.kind_ && n_ == o.n_ && rmax_ == o.rmax_ && border_ == o.border_;
  }

 private:
  RadialGrid() = default;
  GridKind kind_ = GridKind::UniformMidpoint;
  int n_ = 0;
  int border_ = 0;
  double rmax_ = 0.0;
  Vec r_, w_, wc_;
  std::vector<double> zeros_;
};

using GridPtr = std::shared_ptr<const RadialGrid>;

/// sum_i w_i f_i, the discrete \int_0^rmax f(r) r dr.
double integrate_radial(const Vec& samples, const RadialGrid& grid);
Complex integrate_radial(const CVec& samples, const RadialGrid& grid);

/// Cumulative integral C_i = \int_0^{r_i} g(s) ds of node samples g_i,
/// by local polynomial panels of the requested order. The integrand is
/// extrapolated over the end panels [0, r_1] and [r_n, rmax].
/// Returns C at the nodes; `total` (if non-null) receives \int_0^rmax g ds.
Vec cumulative_from_zero(const RadialGrid& grid, const Vec& g, QuadOrder order,
                         double* total = nullptr);

/// Finite-difference derivative d^k/dr^k of node samples, Fornberg weights
/// on `stencil`-point windows (clamped one-sided near the ends).
Vec fd_derivative(const RadialGrid& grid, const Vec& f, int deriv = 1, int stencil = 7);
CVec fd_derivative(const RadialGrid& grid, const CVec& f, int deriv = 1, int stencil = 7);

/// Fornberg finite-difference weights for derivative `der` at point x0 from
/// nodes xs. Exposed for reuse by anyone building stencils.
std::vector<double> fornberg_weights(double x0, const double* xs, int npts, int der);

/// Resample an m-equivariant radial profile onto another grid by cubic
/// interpolation of u / r^|m| (the regular factor), zero beyond the source
/// domain.
CVec resample_profile(const RadialGrid& from, const CVec& u, int m, const RadialGrid& to);

}  // namespace css
