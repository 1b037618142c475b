#ifndef STABLEHIT_APPLICATIONS_HPP
#define STABLEHIT_APPLICATIONS_HPP

// Consequences of the hitting-time law: the invariant function h of the
// process conditioned to avoid zero, the excursion-length density, the
// survival ratio Y(s,x) and its unit limit, and the entrance-law
// identities of the excursion measure.
//
// All excursion quantities are stated under the normalisation that ties
// the excursion measure to the q-potential density at zero.

#include <functional>

#include "stablehit/params.hpp"

namespace stablehit {

// Invariant (harmonic) function of the process killed at zero:
//   h(x) = -Gamma(1-alpha) sin(pi alpha rho_hat)/pi |x|^{alpha-1},  x > 0,
// with rho_hat -> rho for x < 0.  Positive and (alpha-1)-homogeneous.
double h_function(const StableParams& p, double x);

// Density of the excursion length, n(zeta in dt)/dt = W t^{1/alpha - 2}.
double excursion_length_density(const StableParams& p, double t);

// The coefficient W = (alpha-1)/Gamma(1/alpha) sin(pi/alpha)/cos(pi(rho-1/2)).
double excursion_coefficient(const StableParams& p);

// Tail n(zeta > t) = W t^{1/alpha - 1} / (1 - 1/alpha).
double excursion_length_tail(const StableParams& p, double t);

// Y(s, x) = P_x(T_0 > s) / (h(x) n(zeta > s)); tends to 1 as s -> infinity
// and is bounded away from 0 and infinity.  Evaluated through the scaling
// reduction Y(s, x) = Y(|x|^{-alpha} s, sgn x).
double ratio_Y(const StableParams& p, double x, double s, double tol = 1e-8);

// Entrance-law density of the excursion measure,
//   n(X_t in dx)/dx = |x|^{-alpha} p(sgn(-x), |x|^{-alpha} t),
// the sign reversal coming from the dual process.
double entrance_law_density(const StableParams& p, double t, double x,
                            double tol = 1e-8);

// A bounded test function with quadrature hints.
struct TestFunction {
    std::function<double(double)> f;
    double bound = 1.0; // sup |f|
};

// Entrance expectation of the process conditioned to avoid zero:
//   Gamma(-alpha) sin(pi alpha rho)/pi     E_1[ I^{-1} f(-(t/I)^{1/alpha}) ]
// + Gamma(-alpha) sin(pi alpha rho_hat)/pi E_2[ I^{-1} f( (t/I)^{1/alpha}) ],
// the expectations taken against the analytic hitting-time densities.
// For f == 1 the value is identically 1.
double conditioned_entrance(const StableParams& p, double t,
                            const TestFunction& f, double tol = 1e-6);

} // namespace stablehit

#endif
