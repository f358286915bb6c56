#pragma once

#include <vector>

#include "invnls/grid.hpp"

namespace invnls {

/// Sign convention shared by every module: the linear flow of
/// i du/dt = L_a u is u(t) = exp(-i t L_a) u0.
inline constexpr double kPropagatorSign = -1.0;

/// L_a u = -u'' - u'/r + a u / r^2, applied spectrally as H^-1 (k^2 . H u).
RadialField apply_La(const RadialField& field);

/// u(t) = exp(-i t L_a) u0 via the diagonal multiplier exp(-i t k^2).
RadialField linear_propagate(const RadialField& field, double t);

/// Validation oracle: dense symmetric second-order finite-difference
/// discretization of L_a on the same nodes (Dirichlet at r_max; Dirichlet
/// ghost at the origin for a > 0, no-flux for a = 0), eigendecomposed and
/// exponentiated. Refuses grids with n > 256.
RadialField oracle_propagate(const RadialField& field, double t);

struct DecaySample {
  double t = 0.0;
  double sup_norm = 0.0;
  double l2_norm = 0.0;
  double boundary_mass = 0.0;  // outer-10% mass fraction
};

/// Sup-norm decay probe for the linear flow at the given times
/// (positive, increasing). Each sample carries the boundary-mass fraction;
/// a value above 1e-6 means the measurement is reflection-contaminated.
std::vector<DecaySample> dispersive_decay_probe(const RadialField& u0,
                                                const std::vector<double>& times);

/// Least-squares slope of log(sup_norm) against log(t).
double fit_decay_slope(const std::vector<DecaySample>& samples);

/// True if any sample has boundary mass above the tolerance.
bool decay_probe_contaminated(const std::vector<DecaySample>& samples,
                              double tol = 1e-6);

}  // namespace invnls
