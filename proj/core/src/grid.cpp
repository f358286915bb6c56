#include "invnls/grid.hpp"

#include <cmath>
#include <nlohmann/json.hpp>
#include <sstream>

#include "invnls/bessel.hpp"
#include "invnls/errors.hpp"

namespace invnls {

namespace {

constexpr double kRoundTripTol = 1e-12;

}  // namespace

std::shared_ptr<const RadialGrid> RadialGrid::build(double nu, double r_max, int n) {
  if (n < 8) throw ConfigError("RadialGrid: need n >= 8");
  if (!(r_max > 0.0)) throw ConfigError("RadialGrid: need r_max > 0");
  if (!(nu >= 0.0)) throw ConfigError("RadialGrid: need nu >= 0");

  auto grid = std::shared_ptr<RadialGrid>(new RadialGrid());
  grid->nu_ = nu;
  grid->r_max_ = r_max;
  grid->n_ = n;

  VectorXd zeros(n + 1);
  for (int m = 1; m <= n + 1; ++m) zeros[m - 1] = bessel_j_zero(nu, m);
  const double big = zeros[n];  // j_{nu,n+1}

  grid->nodes_.resize(n);
  grid->spectral_nodes_.resize(n);
  grid->quad_weights_.resize(n);
  grid->spectral_weights_.resize(n);
  for (int j = 0; j < n; ++j) {
    grid->nodes_[j] = zeros[j] * r_max / big;
    grid->spectral_nodes_[j] = zeros[j] / r_max;
    const double jp1 = bessel_j(nu + 1.0, zeros[j]);
    grid->quad_weights_[j] = 2.0 * r_max * r_max / (big * big * jp1 * jp1);
    grid->spectral_weights_[j] = 2.0 / (r_max * r_max * jp1 * jp1);
    if (!(grid->quad_weights_[j] > 0.0)) {
      throw NumericError("RadialGrid: non-positive quadrature weight");
    }
  }

  // Forward transform and spectral derivative need J_nu and J_{nu+1} at all
  // products j_m j_j / j_{n+1}; these are also exactly k_m * r_j.
  grid->forward_.resize(n, n);
  MatrixXd basis(n, n);        // J_nu(k_m r_j), m-th column
  MatrixXd basis_deriv(n, n);  // d/dr J_nu(k_m r) at r_j
  for (int m = 0; m < n; ++m) {
    const double km = grid->spectral_nodes_[m];
    for (int j = 0; j < n; ++j) {
      const double x = zeros[m] * zeros[j] / big;
      const double jnux = bessel_j(nu, x);
      basis(j, m) = jnux;
      basis_deriv(j, m) = km * ((x > 0 ? nu / x * jnux : 0.0) - bessel_j(nu + 1.0, x));
      grid->forward_(m, j) = grid->quad_weights_[j] * jnux;
    }
  }

  grid->inverse_ = grid->forward_.partialPivLu().inverse();
  const MatrixXd eye = MatrixXd::Identity(n, n);
  double resid = (grid->inverse_ * grid->forward_ - eye).cwiseAbs().maxCoeff();
  if (resid > 0.1 * kRoundTripTol) {
    // One Newton step X <- X(2I - AX) squares the inversion residual.
    grid->inverse_ = grid->inverse_ * (2.0 * eye - grid->forward_ * grid->inverse_);
    resid = (grid->inverse_ * grid->forward_ - eye).cwiseAbs().maxCoeff();
  }
  if (resid > kRoundTripTol) {
    std::ostringstream msg;
    msg << "RadialGrid: transform round-trip residual " << resid << " exceeds "
        << kRoundTripTol;
    throw NumericError(msg.str());
  }

  // du/dr = sum_m u_hat_m d/dr J_nu(k_m r), u_hat = forward * u.
  grid->deriv_.resize(n, n);
  for (int i = 0; i < n; ++i) {
    for (int m = 0; m < n; ++m) {
      grid->deriv_(i, m) = grid->spectral_weights_[m] * basis_deriv(i, m);
    }
  }
  grid->deriv_ = grid->deriv_ * grid->forward_;

  const double wsum = grid->quad_weights_.sum();
  const double disk = r_max * r_max / 2.0;
  if (std::abs(wsum - disk) > 0.01 * disk) {
    throw NumericError("RadialGrid: quadrature weights fail the disk-measure check");
  }
  return grid;
}

nlohmann::json RadialGrid::to_json() const {
  return nlohmann::json{{"nu", nu_}, {"r_max", r_max_}, {"n", n_}};
}

std::shared_ptr<const RadialGrid> RadialGrid::from_json(const nlohmann::json& j) {
  try {
    return build(j.at("nu").get<double>(), j.at("r_max").get<double>(),
                 j.at("n").get<int>());
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("grid spec: ") + e.what());
  }
}

RadialField::RadialField(GridPtr g, double a_, VectorXcd v)
    : grid(std::move(g)), a(a_), values(std::move(v)) {
  check_valid();
}

void RadialField::check_valid() const {
  if (!grid) throw ConfigError("RadialField: null grid");
  if (values.size() != grid->n()) throw ConfigError("RadialField: size mismatch");
  const double nu2 = grid->nu() * grid->nu();
  if (std::abs(a - nu2) > 1e-12 * std::max(1.0, nu2)) {
    throw ConfigError("RadialField: potential strength a must equal grid nu^2");
  }
  if (!values.allFinite()) throw NumericError("RadialField: non-finite values");
}

SpectralField hankel_forward(const RadialField& field) {
  field.check_valid();
  return SpectralField{field.grid, apply_real(field.grid->forward_matrix(), field.values)};
}

RadialField hankel_inverse(const SpectralField& spec) {
  if (!spec.grid) throw ConfigError("hankel_inverse: null grid");
  const double nu = spec.grid->nu();
  return RadialField(spec.grid, nu * nu,
                     apply_real(spec.grid->inverse_matrix(), spec.coeffs));
}

VectorXcd apply_real(const MatrixXd& m, const VectorXcd& v) {
  VectorXcd out(m.rows());
  out.real() = m * v.real();
  out.imag() = m * v.imag();
  return out;
}

double plane_integral(const RadialGrid& grid, const VectorXd& f) {
  return 2.0 * M_PI * grid.quad(f);
}

double boundary_mass_fraction(const RadialField& field) {
  const auto& r = field.grid->nodes();
  const auto& w = field.grid->quad_weights();
  const double cut = 0.9 * field.grid->r_max();
  double outer = 0.0, total = 0.0;
  for (int j = 0; j < field.grid->n(); ++j) {
    const double m = w[j] * std::norm(field.values[j]);
    total += m;
    if (r[j] > cut) outer += m;
  }
  return total > 0.0 ? outer / total : 0.0;
}

}  // namespace invnls
