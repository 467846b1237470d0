#pragma once

#include <vector>

namespace css {

/// J_nu(x) for integer nu, defined for nu < 0 via J_{-n} = (-1)^n J_n.
double bessel_j(int nu, double x);

/// d/dx J_nu(x) = (J_{nu-1} - J_{nu+1})/2.
double bessel_j_prime(int nu, double x);

/// First `count` positive zeros of J_nu (nu >= 0), ascending.
/// McMahon estimates polished by safeguarded Newton; ~1e-14 relative.
std::vector<double> bessel_zeros(int nu, int count);

}  // namespace css
