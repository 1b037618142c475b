#ifndef STABLEHIT_DENSITY_HPP
#define STABLEHIT_DENSITY_HPP

// Density p(t) of the hitting time T_0 via residue series: the
// K(alpha)-filtered partial sums for irrational alpha, the three absolutely
// convergent series (with double-pole log terms) for rational alpha, and
// the small-t asymptotic expansion, plus the dispatcher that picks a method
// for a requested tolerance.

#include <optional>

#include "stablehit/params.hpp"

namespace stablehit {

enum class Method { SeriesIrrational, SeriesRational, Asymptotic, Inversion };

const char* method_name(Method m);

struct DensityResult {
    double value;        // probability density, units 1/time
    Method method;
    double err_estimate; // absolute
};

// Truncation index N for the filtered irrational series, its K(alpha)
// membership certificate, and the proof-side bound on the shifted-contour
// remainder |I_N(t)|.
struct TruncationPlan {
    int N;
    bool in_K;
    double tail_bound;
};

// Distance from x to the nearest integer, in [0, 1/2].
double norm_dist(double x);

// Membership test N in K(alpha):
//   ||(N-1/2) alpha|| > exp(-((alpha-1)/2) (N-2) ln(N-2)),  N >= 3.
bool in_K(double alpha, int N);

// Census of K(alpha) over [1, n]; N = 1, 2 never qualify.
double K_density(double alpha, int n);

// Remainder bound |I_N(t)| for a given N (which need not be in K(alpha);
// the bound uses the computable ||(N-1/2) alpha|| directly).
TruncationPlan make_truncation_plan_for_N(const StableParams& p, double t,
                                          int N);

// Smallest N in K(alpha) whose tail bound at t meets tol; nullopt if none
// does below the search cap.
std::optional<TruncationPlan> make_truncation_plan(const StableParams& p,
                                                   double t, double tol,
                                                   int n_cap = 400);

// Individual series terms (prefactors included); term k of each family is
// minus the residue of h(s) t^{-s} at the corresponding catalog pole.
double series_term_family1(const StableParams& p, StartSign sign, int k,
                           double t);
double series_term_family2(const StableParams& p, StartSign sign, int k,
                           double t);
// Double-pole term k (rational alpha = m/n only; pole at 1 + k n - 1/alpha).
double series_term_double_pole(const StableParams& p, StartSign sign, int k,
                               double t);
// The bracketed R_k(t) factor of the double-pole term.
double rk_value(const StableParams& p, StartSign sign, int k, double t);

// Filtered partial sums at plan.N (requires the K(alpha) certificate).
DensityResult density_irrational(const StableParams& p, StartSign sign,
                                 double t, const TruncationPlan& plan);

// Unfiltered full series; valid for alpha outside the Liouville-type
// exceptional class, which cannot be decided from a float.  Callers opt in
// explicitly.
DensityResult density_irrational_unfiltered(const StableParams& p,
                                            StartSign sign, double t,
                                            double tol);

// Three-series representation for declared rational alpha.
DensityResult density_rational(const StableParams& p, StartSign sign,
                               double t, int k_max);

// Asymptotic expansion as t -> 0: terms 1 <= n < 1+c; the full series
// diverges, so c caps the order.  err_estimate is the first omitted term.
DensityResult density_asymptotic_small_t(const StableParams& p,
                                         StartSign sign, double t, double c);

struct DensityOptions {
    bool liouville_unsafe = false;  // unfiltered series for irrational alpha
    std::optional<int> terms;       // override k_max / N
};

// Method dispatcher.  tol is an absolute error target.
DensityResult density(const StableParams& p, StartSign sign, double t,
                      double tol, const DensityOptions& opts = {});

// Crossover below which the dispatcher prefers the small-t expansion.
inline constexpr double kSmallTCrossover = 0.05;

// Coefficient P of the t^{1/alpha - 2} leading term of p(t) as t -> inf
// (from the first collected residue), used for tail integration.
double density_tail_coefficient(const StableParams& p, StartSign sign);

} // namespace stablehit

#endif
