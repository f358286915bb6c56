#include "invnls/operators.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

#include "invnls/errors.hpp"

namespace invnls {

RadialField apply_La(const RadialField& field) {
  SpectralField spec = hankel_forward(field);
  spec.coeffs.array() *=
      field.grid->spectral_nodes().array().square().cast<Complex>();
  return hankel_inverse(spec);
}

RadialField linear_propagate(const RadialField& field, double t) {
  if (!std::isfinite(t)) throw ConfigError("linear_propagate: non-finite t");
  SpectralField spec = hankel_forward(field);
  const VectorXd& k = field.grid->spectral_nodes();
  for (int m = 0; m < k.size(); ++m) {
    spec.coeffs[m] *= std::exp(Complex(0.0, kPropagatorSign * t * k[m] * k[m]));
  }
  return hankel_inverse(spec);
}

RadialField oracle_propagate(const RadialField& field, double t) {
  field.check_valid();
  const RadialGrid& g = *field.grid;
  const int n = g.n();
  if (n > 256) {
    throw ConfigError("oracle_propagate: dense eigendecomposition guard, n <= 256");
  }
  const double a = field.a;
  const VectorXd& r = g.nodes();

  // Cell midpoints including the ghost boundaries at 0 and r_max.
  VectorXd mid(n + 1);
  mid[0] = 0.5 * r[0];
  for (int i = 1; i < n; ++i) mid[i] = 0.5 * (r[i - 1] + r[i]);
  mid[n] = 0.5 * (r[n - 1] + g.r_max());

  VectorXd h(n + 1);
  h[0] = r[0];
  for (int i = 1; i < n; ++i) h[i] = r[i] - r[i - 1];
  h[n] = g.r_max() - r[n - 1];

  VectorXd mu(n);
  for (int i = 0; i < n; ++i) mu[i] = r[i] * (mid[i + 1] - mid[i]);

  // Stiffness form of int (|u'|^2 + a|u|^2/r^2) r dr with homogeneous
  // Dirichlet data at r_max, and at the origin for a > 0 (u ~ r^nu). For
  // a = 0 the origin is a natural no-flux boundary.
  MatrixXd K = MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    double diag = mid[i + 1] / h[i + 1] + a * mu[i] / (r[i] * r[i]);
    if (i > 0 || a > 0.0) diag += mid[i] / h[i];
    K(i, i) = diag;
    if (i + 1 < n) {
      K(i, i + 1) = -mid[i + 1] / h[i + 1];
      K(i + 1, i) = K(i, i + 1);
    }
  }

  const VectorXd sqm = mu.cwiseSqrt();
  MatrixXd B = K;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) B(i, j) /= sqm[i] * sqm[j];

  Eigen::SelfAdjointEigenSolver<MatrixXd> eig(B);
  if (eig.info() != Eigen::Success) {
    throw NumericError("oracle_propagate: eigendecomposition failed");
  }

  VectorXcd w = field.values.cwiseProduct(sqm.cast<Complex>());
  VectorXcd c = apply_real(eig.eigenvectors().transpose(), w);
  for (int i = 0; i < n; ++i) {
    c[i] *= std::exp(Complex(0.0, kPropagatorSign * t * eig.eigenvalues()[i]));
  }
  VectorXcd out = apply_real(eig.eigenvectors(), c);
  out.array() /= sqm.array().cast<Complex>();
  return RadialField(field.grid, field.a, std::move(out));
}

std::vector<DecaySample> dispersive_decay_probe(const RadialField& u0,
                                                const std::vector<double>& times) {
  u0.check_valid();
  double prev = 0.0;
  for (double t : times) {
    if (!(t > prev)) throw ConfigError("dispersive_decay_probe: times must be positive and increasing");
    prev = t;
  }
  std::vector<DecaySample> out;
  out.reserve(times.size());
  const auto& w = u0.grid->quad_weights();
  for (double t : times) {
    RadialField ut = linear_propagate(u0, t);
    DecaySample s;
    s.t = t;
    s.sup_norm = ut.values.cwiseAbs().maxCoeff();
    double m = 0.0;
    for (int j = 0; j < ut.values.size(); ++j) m += w[j] * std::norm(ut.values[j]);
    s.l2_norm = std::sqrt(2.0 * M_PI * m);
    s.boundary_mass = boundary_mass_fraction(ut);
    out.push_back(s);
  }
  return out;
}

double fit_decay_slope(const std::vector<DecaySample>& samples) {
  if (samples.size() < 2) throw ConfigError("fit_decay_slope: need >= 2 samples");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(samples.size());
  for (const auto& s : samples) {
    if (!(s.sup_norm > 0.0)) throw NumericError("fit_decay_slope: non-positive sup norm");
    const double x = std::log(s.t), y = std::log(s.sup_norm);
    sx += x; sy += y; sxx += x * x; sxy += x * y;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

bool decay_probe_contaminated(const std::vector<DecaySample>& samples, double tol) {
  for (const auto& s : samples)
    if (s.boundary_mass > tol) return true;
  return false;
}

}  // namespace invnls
