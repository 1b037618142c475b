#ifndef STABLEHIT_GAMMA_HPP
#define STABLEHIT_GAMMA_HPP

// Complex special functions underlying every transform formula in the
// library: principal-branch log-gamma, digamma, the gamma ratio
// Gamma(s)/Gamma(alpha*s), the Stirling envelope of |Gamma(x+iy)|, and
// overflow-safe logarithms of sin/cos of complex arguments.

#include <complex>

namespace stablehit {

using Complex = std::complex<double>;

// Log of |Gamma(x)| together with the sign of Gamma(x), for real x that is
// not a nonpositive integer. Exponentiate once at the end of a product.
struct SignedLog {
    double log;
    int sign; // -1 or +1
};

// Principal branch of log Gamma(z), continuous on C minus the cut (-inf, 0].
// exp(log_gamma(z)) == Gamma(z). Throws PoleError at nonpositive integers.
Complex log_gamma(Complex z);

// Real-argument fast path. x > 0.
double log_gamma(double x);

// log |Gamma(x)| and sign(Gamma(x)) for real x, any sign, off the poles.
SignedLog log_abs_gamma(double x);

// Logarithmic derivative of Gamma at x > 0.
double digamma(double x);

// Gamma(s) / Gamma(alpha*s), evaluated in log space so the ratio survives
// arguments far beyond the overflow range of Gamma itself.
Complex gamma_ratio(Complex s, double alpha);

// sqrt(2*pi) * |y|^(x-1/2) * exp(-pi*|y|/2): the asymptotic envelope of
// |Gamma(x+iy)| as |y| -> infinity, uniform for x in compacts.
double stirling_envelope(double x, double y);

// A logarithm of sin(z) (resp. cos(z)) that never overflows for large
// |Im z|. The branch is unspecified; exp of the result equals sin(z)
// (resp. cos(z)) exactly, which is all that sums of logs require.
Complex log_sin(Complex z);
Complex log_cos(Complex z);

// sin(pi*x) / cos(pi*x) with exact integer argument reduction, so that
// sin_pi(k) == 0 for integer k no matter how large.
double sin_pi(double x);
double cos_pi(double x);

// Throws DomainError if either component of z is NaN or infinite.
void require_finite(Complex z, const char* what);
void require_finite(double x, const char* what);

} // namespace stablehit

#endif
