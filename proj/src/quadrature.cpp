#include "oqs/quadrature.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_integration.h>
#include <gsl/gsl_sf_gamma.h>

#include <cmath>
#include <memory>
#include <mutex>

#include "oqs/linalg.hpp"

namespace oqs {

namespace {

// GSL aborts by default; disable once, check return codes instead.
void quiet_gsl() {
  static std::once_flag flag;
  std::call_once(flag, [] { gsl_set_error_handler_off(); });
}

double call_thunk(double x, void* p) {
  return (*static_cast<const std::function<double(double)>*>(p))(x);
}

struct WorkspaceDeleter {
  void operator()(gsl_integration_workspace* w) const {
    gsl_integration_workspace_free(w);
  }
};
using Workspace =
    std::unique_ptr<gsl_integration_workspace, WorkspaceDeleter>;

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 double epsabs, double epsrel) {
  quiet_gsl();
  Workspace w(gsl_integration_workspace_alloc(8192));
  gsl_function gf{&call_thunk, const_cast<std::function<double(double)>*>(&f)};
  double result = 0.0, abserr = 0.0;
  int status = gsl_integration_qag(&gf, a, b, epsabs, epsrel, 8192,
                                   GSL_INTEG_GAUSS61, w.get(), &result,
                                   &abserr);
  if (status != GSL_SUCCESS && abserr > 100 * epsabs &&
      abserr > 100 * epsrel * std::abs(result))
    throw NumericsError("IntegralNotConverged (qag)");
  return result;
}

double integrate_to_inf(const std::function<double(double)>& f, double a,
                        double epsabs, double epsrel) {
  quiet_gsl();
  Workspace w(gsl_integration_workspace_alloc(8192));
  gsl_function gf{&call_thunk, const_cast<std::function<double(double)>*>(&f)};
  double result = 0.0, abserr = 0.0;
  int status = gsl_integration_qagiu(&gf, a, epsabs, epsrel, 8192, w.get(),
                                     &result, &abserr);
  if (status != GSL_SUCCESS && abserr > 100 * epsabs &&
      abserr > 100 * epsrel * std::abs(result))
    throw NumericsError("IntegralNotConverged (qagiu)");
  return result;
}

namespace {

double fourier(const std::function<double(double)>& f, double omega,
               gsl_integration_qawo_enum kind, double epsabs) {
  quiet_gsl();
  Workspace w(gsl_integration_workspace_alloc(8192));
  Workspace cycles(gsl_integration_workspace_alloc(8192));
  gsl_integration_qawo_table* table =
      gsl_integration_qawo_table_alloc(omega, 1.0, kind, 64);
  gsl_function gf{&call_thunk, const_cast<std::function<double(double)>*>(&f)};
  double result = 0.0, abserr = 0.0;
  int status = gsl_integration_qawf(&gf, 0.0, epsabs, 8192, w.get(),
                                    cycles.get(), table, &result, &abserr);
  gsl_integration_qawo_table_free(table);
  if (status != GSL_SUCCESS && abserr > 1000 * epsabs)
    throw NumericsError("IntegralNotConverged (qawf)");
  return result;
}

}  // namespace

double fourier_cos(const std::function<double(double)>& f, double omega,
                   double epsabs) {
  if (omega == 0.0) return integrate_to_inf(f, 0.0, epsabs, epsabs);
  return fourier(f, omega, GSL_INTEG_COSINE, epsabs);
}

double fourier_sin(const std::function<double(double)>& f, double omega,
                   double epsabs) {
  if (omega == 0.0) return 0.0;
  return fourier(f, omega, GSL_INTEG_SINE, epsabs);
}

std::complex<double> trigamma(std::complex<double> z) {
  // Recurrence psi'(z) = psi'(z+1) + 1/z^2 until |z| is comfortably in the
  // asymptotic regime, then
  // psi'(z) ~ 1/z + 1/(2 z^2) + sum_k B_{2k} z^{-2k-1}.
  std::complex<double> shift = 0.0;
  while (std::abs(z) < 16.0 || z.real() < 16.0) {
    shift += 1.0 / (z * z);
    z += 1.0;
  }
  static const double bern[] = {1.0 / 6.0,   -1.0 / 30.0,    1.0 / 42.0,
                                -1.0 / 30.0, 5.0 / 66.0,     -691.0 / 2730.0,
                                7.0 / 6.0,   -3617.0 / 510.0};
  const std::complex<double> inv = 1.0 / z;
  const std::complex<double> inv2 = inv * inv;
  std::complex<double> sum = inv + 0.5 * inv2;
  std::complex<double> pw = inv * inv2;  // z^{-3}
  for (double b2k : bern) {
    sum += b2k * pw;
    pw *= inv2;
  }
  return sum + shift;
}

double log_abs_gamma(double x, double y) {
  quiet_gsl();
  gsl_sf_result lnr, arg;
  int status = gsl_sf_lngamma_complex_e(x, y, &lnr, &arg);
  if (status != GSL_SUCCESS) throw NumericsError("lngamma_complex failed");
  return lnr.val;
}

}  // namespace oqs
