#pragma once

#include <Eigen/Dense>
#include <complex>
#include <memory>
#include <nlohmann/json_fwd.hpp>

namespace invnls {

using Eigen::MatrixXd;
using Eigen::VectorXcd;
using Eigen::VectorXd;
using Complex = std::complex<double>;

/// Radial collocation grid on Bessel-zero nodes with the order-nu discrete
/// Hankel transform pair that diagonalizes L_a = -Laplacian + a/r^2 (nu^2 = a)
/// on radial functions vanishing at r_max.
///
/// Nodes are r_j = j_{nu,j} * r_max / j_{nu,n+1} for the positive zeros
/// j_{nu,m} of J_nu; spectral nodes are k_j = j_{nu,j} / r_max. The forward
/// matrix is the Fisk-Johnson quadrature transform
///     u_hat(k_m) = sum_j w_j u(r_j) J_nu(k_m r_j)  ~  int u J_nu(k_m r) r dr,
/// with w_j = 2 r_max^2 / (j_{nu,n+1}^2 J_{nu+1}(j_{nu,j})^2). The inverse is
/// the dense numerical inverse of the forward matrix, so the round trip is
/// exact to machine precision by construction.
///
/// Grids are immutable after construction and safe to share across threads.
class RadialGrid {
 public:
  /// Requires n >= 8, r_max > 0, nu >= 0. Throws NumericError if the
  /// Bessel-zero computation fails or the constructed pair violates its
  /// invariants (round trip, weight positivity, weight sum).
  static std::shared_ptr<const RadialGrid> build(double nu, double r_max, int n);

  double nu() const { return nu_; }
  double r_max() const { return r_max_; }
  int n() const { return n_; }

  const VectorXd& nodes() const { return nodes_; }
  const VectorXd& spectral_nodes() const { return spectral_nodes_; }
  /// Weights for int_0^r_max f(r) r dr  ~=  sum_j w_j f(r_j).
  const VectorXd& quad_weights() const { return quad_weights_; }
  /// Weights for int_0^K g(k) k dk  ~=  sum_m what_m g(k_m), K = j_{nu,n+1}/r_max.
  const VectorXd& spectral_weights() const { return spectral_weights_; }

  const MatrixXd& forward_matrix() const { return forward_; }
  const MatrixXd& inverse_matrix() const { return inverse_; }
  /// Spectral radial derivative: values -> (du/dr) values.
  const MatrixXd& derivative_matrix() const { return deriv_; }

  /// int_0^r_max f r dr by the grid quadrature; f sampled on the nodes.
  double quad(const VectorXd& f) const { return quad_weights_.dot(f); }

  /// Serialized spec {nu, r_max, n}; matrices are rebuilt, never stored.
  nlohmann::json to_json() const;
  static std::shared_ptr<const RadialGrid> from_json(const nlohmann::json& j);

 private:
  RadialGrid() = default;

  double nu_ = 0.0;
  double r_max_ = 0.0;
  int n_ = 0;
  VectorXd nodes_, spectral_nodes_, quad_weights_, spectral_weights_;
  MatrixXd forward_, inverse_, deriv_;
};

using GridPtr = std::shared_ptr<const RadialGrid>;

/// Complex radial samples u(r_j) tied to a grid and a potential strength a.
/// Invariant: a == grid->nu()^2 (checked), values finite (checked after ops).
struct RadialField {
  GridPtr grid;
  double a = 0.0;
  VectorXcd values;

  RadialField() = default;
  RadialField(GridPtr g, double a_, VectorXcd v);

  /// Throws NumericError on NaN/Inf, ConfigError on grid/a mismatch.
  void check_valid() const;
  bool finite() const { return values.allFinite(); }
};

/// Hankel coefficients u_hat(k_j) on the same grid.
struct SpectralField {
  GridPtr grid;
  VectorXcd coeffs;
};

SpectralField hankel_forward(const RadialField& field);
RadialField hankel_inverse(const SpectralField& spec);

/// Apply a real matrix to a complex vector (two real products).
VectorXcd apply_real(const MatrixXd& m, const VectorXcd& v);

/// 2*pi * quadrature of f over the disk (radial measure r dr).
double plane_integral(const RadialGrid& grid, const VectorXd& f);

/// Fraction of mass in the outer 10% band r > 0.9 r_max.
double boundary_mass_fraction(const RadialField& field);

}  // namespace invnls
