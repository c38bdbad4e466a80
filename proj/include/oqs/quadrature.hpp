#pragma once

// Thin wrappers around GSL quadrature plus the special functions needed by
// the bath-correlation evaluators.

#include <complex>
#include <functional>

namespace oqs {

// Adaptive integral of f over [a, b] (QAG, 61-point rule).
// Throws NumericsError on failure to converge.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double epsabs = 1e-10, double epsrel = 1e-10);

// Adaptive integral of f over [a, infinity) (QAGIU).
double integrate_to_inf(const std::function<double(double)>& f, double a,
                        double epsabs = 1e-10, double epsrel = 1e-10);

// Fourier integrals over [0, infinity) with QAWF:
//   int_0^inf f(t) cos(omega t) dt  /  int_0^inf f(t) sin(omega t) dt.
// omega = 0 falls back to the plain half-line integral (cos) or 0 (sin).
double fourier_cos(const std::function<double(double)>& f, double omega,
                   double epsabs = 1e-10);
double fourier_sin(const std::function<double(double)>& f, double omega,
                   double epsabs = 1e-10);

// Complex trigamma psi'(z) via the asymptotic series with recurrence shift.
std::complex<double> trigamma(std::complex<double> z);

// log |Gamma(x + i y)| through gsl_sf_lngamma_complex_e.
double log_abs_gamma(double x, double y);

}  // namespace oqs
