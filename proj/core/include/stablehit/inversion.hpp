#ifndef STABLEHIT_INVERSION_HPP
#define STABLEHIT_INVERSION_HPP

// Independent oracle for the series representations: numerical inversion of
// the Mellin transform along a vertical contour, plus the survival function
// built from head-expansion + quadrature + power-law tail.

#include "stablehit/density.hpp"
#include "stablehit/params.hpp"

namespace stablehit {

struct ContourSpec {
    double abscissa;   // c: contour Re s, away from every pole by >= 1e-3
    double half_width; // U: |Im s| truncation
    int nodes;         // approximate evaluation-node budget
};

// Choose the truncation half-width so the envelope tail
// e^{-(pi/2)(alpha-1)U} bound falls below tol at this t and abscissa.
ContourSpec plan_contour(const StableParams& p, double t, double tol,
                         double abscissa = 1.0);

// p(t) = (1/2pi) int h(c+iu) t^{-c-iu} du with c = 1 by default.  The
// imaginary residual of the computed integral is folded into err_estimate.
DensityResult invert_density(const StableParams& p, StartSign sign, double t,
                             double tol);

// Same on an arbitrary vertical contour (no pole within 1e-3); used for
// contour-independence checks and for shifted-contour identities.
DensityResult invert_density_at(const StableParams& p, StartSign sign,
                                double t, double tol, double abscissa);

// P(T_0 > t): analytic small-t head below the crossover, log-axis
// quadrature of the density up to a tolerance-determined T*, one-term
// power-law closed tail beyond.  T* depends on tol only, so the function is
// nonincreasing in t by construction.
double survival(const StableParams& p, StartSign sign, double t, double tol);

// int_0^b p(u) du with term-by-term integrated small-t expansion at its
// optimal truncation order; used for the head of survival and mass checks.
double asymptotic_head_mass(const StableParams& p, StartSign sign, double b,
                            double* err_out = nullptr);

} // namespace stablehit

#endif
