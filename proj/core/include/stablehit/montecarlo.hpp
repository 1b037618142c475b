#ifndef STABLEHIT_MONTECARLO_HPP
#define STABLEHIT_MONTECARLO_HPP

// Simulation oracle: stable increments in the (alpha, rho) normalisation
// and an epsilon-barrier estimate of the hitting-time law.  Paths carry
// independent counter-seeded RNG streams, so results are bit-identical for
// a given seed regardless of the worker count.

#include <cstdint>
#include <vector>

#include "stablehit/params.hpp"

namespace stablehit {

// xoshiro256++ with splitmix64 stream seeding.
class Rng {
public:
    explicit Rng(std::uint64_t seed);
    std::uint64_t next_u64();
    // uniform on [0, 1)
    double uniform01() { return (next_u64() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t s_[4];
};

// One increment X_dt of the stable process started at 0, via the
// Chambers-Mallows-Stuck transform.  In this normalisation the skewness
// enters only through the angle pi (rho - 1/2), and the scale prefactor
// cancels exactly.
double sample_stable_increment(const StableParams& p, double dt, Rng& rng);

struct PathEstimate {
    std::vector<double> t_grid;
    std::vector<double> survival_eps;      // barrier at eps
    std::vector<double> survival_eps_half; // barrier at eps/2, same paths
    std::vector<double> survival_extrapolated; // Richardson in eps^(alpha-1)
    std::vector<double> stderr_eps;        // sqrt(p(1-p)/n) at the eps level
    std::vector<double> hit_times_eps;      // per path; +inf if censored
    std::vector<double> hit_times_eps_half; // per path; +inf if censored
    long n_paths = 0;
    double eps = 0.0;
    double dt = 0.0;
    std::uint64_t seed = 0;
};

// Euler-on-grid paths from x0 with stable increments; the recorded stopping
// time is the first grid time with |X| < barrier.  Both the eps and eps/2
// barriers are detected in one sweep (common random numbers), and the
// extrapolated curve removes the leading eps^(alpha-1) barrier bias.
// Requires 0 < eps < |x0|/10 and dt^{1/alpha} < eps/4.
PathEstimate estimate_hitting_law(const StableParams& p, double x0,
                                  double eps, double dt, long n_paths,
                                  std::vector<double> t_grid,
                                  std::uint64_t seed);

// Worker cap honoured by the path loop: min(hardware, STABLEHIT_THREADS).
int worker_count();

} // namespace stablehit

#endif
