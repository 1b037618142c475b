#ifndef STABLEHIT_MELLIN_HPP
#define STABLEHIT_MELLIN_HPP

// The explicit Mellin transform s -> E[T_0^{s-1}] of the first hitting
// time of zero, for both starting signs, with its strip of validity, pole
// catalog, functional-equation residual test and decay envelope.  All
// trigonometric factors of complex arguments are evaluated as exponentials
// in log space, so the transform survives |Im s| far beyond the naive
// overflow point.

#include <complex>
#include <optional>
#include <vector>

#include "stablehit/params.hpp"

namespace stablehit {

using Complex = std::complex<double>;

struct MellinValue {
    Complex value;
    Complex s;
    double strip_lo; // -1/alpha
    double strip_hi; // 2 - 1/alpha
};

// Real poles of the transform h_1 (and h_2): family1 at 1 + n/alpha
// (n >= 1), family2 at n - 1/alpha (n >= 2), family3 at -n - 1/alpha
// (n >= 0).  For rational alpha = m/n the coincidences between families 1
// and 2 are removed from both and listed once in double_poles.  No entry
// lies in 0 <= Re s <= 1.
struct PoleCatalog {
    std::vector<double> family1;
    std::vector<double> family2;
    std::vector<double> family3;
    std::vector<double> double_poles;
};

// Mellin transform of T_0 under P_{+1} (sign Plus) or P_{-1} (sign Minus),
// valid on Re s in (-1/alpha, 2 - 1/alpha); StripError outside.
MellinValue mellin_T0(const StableParams& p, StartSign sign, Complex s);

// Fast path for real s inside the strip; the value is real and positive.
double mellin_T0(const StableParams& p, StartSign sign, double s);

// Meromorphic continuation of the same closed form, for contour shifting
// and residue work outside the strip.  Refuses evaluation within 1e-6 of a
// catalog pole (PoleError) rather than extrapolating.
Complex mellin_T0_continuation(const StableParams& p, StartSign sign,
                               Complex s);

// Symmetric-case closed form (rho = 1/2), same strip.
MellinValue mellin_symmetric(double alpha, Complex s);

// Max-norm of A(s) [h1(s); h2(s)] - [h1(s+1); h2(s+1)] for real
// s in (0, 1 - 1/alpha).  Analytically zero.
double functional_equation_residual(const StableParams& p, double s);

// All catalog poles with family index <= n_max (n_max >= 2).
PoleCatalog pole_catalog(const StableParams& p, int n_max);

// Distance from s to the nearest pole of the transform.
double pole_distance(const StableParams& p, Complex s);

struct DecayEnvelope {
    double lower; // exp(-pi |Im s|)
    double upper; // exp(-(pi/2)(alpha-1) |Im s|)
};

// Envelope of |h_i(s)| for large |Im s|; inconclusive (nullopt) when
// |Im s| <= C0 = 10, below which the bounds are not asserted.
std::optional<DecayEnvelope> decay_envelope(const StableParams& p, Complex s);

// Check hook: lower < |h_sign(s)| < upper.  False also when inconclusive.
bool envelope_check(const StableParams& p, StartSign sign, Complex s);

inline double mellin_strip_lo(const StableParams& p) { return -1.0 / p.alpha; }
inline double mellin_strip_hi(const StableParams& p)
{
    return 2.0 - 1.0 / p.alpha;
}

} // namespace stablehit

#endif
