#include "invnls/bessel.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_sf_bessel.h>

#include <cmath>
#include <mutex>
#include <string>

#include "invnls/errors.hpp"

namespace invnls {

namespace {

// GSL's default error handler aborts the process; switch to status codes once.
void disable_gsl_abort() {
  static std::once_flag flag;
  std::call_once(flag, [] { gsl_set_error_handler_off(); });
}

double check(int status, const gsl_sf_result& res, const char* what) {
  if (status != GSL_SUCCESS) {
    throw NumericError(std::string(what) + " failed: " + gsl_strerror(status));
  }
  return res.val;
}

}  // namespace

double bessel_j(double nu, double x) {
  disable_gsl_abort();
  if (x == 0.0) return nu == 0.0 ? 1.0 : 0.0;
  gsl_sf_result res;
  return check(gsl_sf_bessel_Jnu_e(nu, x, &res), res, "bessel_j");
}

double bessel_j_zero(double nu, unsigned s) {
  disable_gsl_abort();
  gsl_sf_result res;
  double z = check(gsl_sf_bessel_zero_Jnu_e(nu, s, &res), res, "bessel_j_zero");
  // Newton polish to pin the documented 1e-13 tolerance independent of the
  // library's internal stopping rule.
  for (int it = 0; it < 2; ++it) {
    double f = bessel_j(nu, z);
    double df = bessel_j_deriv(nu, z);
    if (df == 0.0) break;
    double step = f / df;
    z -= step;
    if (std::abs(step) < 1e-14 * z) break;
  }
  return z;
}

double bessel_j_deriv(double nu, double x) {
  if (x <= 0.0) throw NumericError("bessel_j_deriv requires x > 0");
  return (nu / x) * bessel_j(nu, x) - bessel_j(nu + 1.0, x);
}

double bessel_k(double nu, double x) {
  disable_gsl_abort();
  gsl_sf_result res;
  return check(gsl_sf_bessel_Knu_e(nu, x, &res), res, "bessel_k");
}

double bessel_k_deriv(double nu, double x) {
  if (x <= 0.0) throw NumericError("bessel_k_deriv requires x > 0");
  return (nu / x) * bessel_k(nu, x) - bessel_k(nu + 1.0, x);
}

double bessel_i(double nu, double x) {
  disable_gsl_abort();
  gsl_sf_result res;
  return check(gsl_sf_bessel_Inu_e(nu, x, &res), res, "bessel_i");
}

}  // namespace invnls
