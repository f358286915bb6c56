#pragma once

namespace invnls {

/// J_nu(x) for real order nu >= 0.
double bessel_j(double nu, double x);

/// s-th positive zero of J_nu (s >= 1), polished to ~1e-14 relative.
double bessel_j_zero(double nu, unsigned s);

/// d/dx J_nu(x), via J_nu'(x) = (nu/x) J_nu(x) - J_{nu+1}(x).
double bessel_j_deriv(double nu, double x);

/// Modified Bessel K_nu(x), x > 0.
double bessel_k(double nu, double x);

/// d/dx K_nu(x) = (nu/x) K_nu(x) - K_{nu+1}(x).
double bessel_k_deriv(double nu, double x);

/// Modified Bessel I_nu(x).
double bessel_i(double nu, double x);

}  // namespace invnls
