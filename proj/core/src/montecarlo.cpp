#include "stablehit/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <string>
#include <thread>

#include "stablehit/errors.hpp"

namespace stablehit {

namespace {

constexpr double kPi = std::numbers::pi;

std::uint64_t splitmix64(std::uint64_t& state)
{
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

inline std::uint64_t rotl(std::uint64_t x, int k)
{
    return (x << k) | (x >> (64 - k));
}

} // namespace

Rng::Rng(std::uint64_t seed)
{
    for (auto& w : s_)
        w = splitmix64(seed);
}

std::uint64_t Rng::next_u64()
{
    std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
    std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
}

double sample_stable_increment(const StableParams& p, double dt, Rng& rng)
{
    if (!(dt > 0.0))
        throw DomainError("sample_stable_increment: dt must be > 0");
    const double al = p.alpha;
    const double theta0 = kPi * (p.rho - 0.5);
    double v = kPi * (rng.uniform01() - 0.5); // uniform on (-pi/2, pi/2)
    double u2 = rng.uniform01();
    double w = -std::log(1.0 - u2);
    if (w < 1e-300)
        w = 1e-300;
    // X_1 = sin(alpha(v+theta0)) cos(v)^{-1/alpha}
    //       * [cos((1-alpha)v - alpha*theta0)/w]^{(1-alpha)/alpha};
    // both cosine arguments stay inside (-pi/2, pi/2) on the admissible set.
    double s1 = std::sin(al * (v + theta0));
    double e = -std::log(std::cos(v)) / al +
               ((1.0 - al) / al) *
                   (std::log(std::cos((1.0 - al) * v - al * theta0)) -
                    std::log(w));
    return std::pow(dt, 1.0 / al) * s1 * std::exp(e);
}

int worker_count()
{
    int hw = static_cast<int>(std::thread::hardware_concurrency());
    if (hw < 1)
        hw = 1;
    if (const char* env = std::getenv("STABLEHIT_THREADS")) {
        int cap = std::atoi(env);
        if (cap >= 1)
            hw = std::min(hw, cap);
    }
    return hw;
}

PathEstimate estimate_hitting_law(const StableParams& p, double x0,
                                  double eps, double dt, long n_paths,
                                  std::vector<double> t_grid,
                                  std::uint64_t seed)
{
    if (x0 == 0.0)
        throw DomainError("estimate_hitting_law: x0 must be nonzero");
    if (!(eps > 0.0 && eps < std::abs(x0) / 10.0))
        throw DomainError("estimate_hitting_law: need 0 < eps < |x0|/10");
    if (!(dt > 0.0 && std::pow(dt, 1.0 / p.alpha) < eps / 4.0))
        throw DomainError(
            "estimate_hitting_law: need dt^{1/alpha} < eps/4 so the barrier "
            "is resolved by the grid");
    if (n_paths < 1)
        throw DomainError("estimate_hitting_law: n_paths must be >= 1");
    if (t_grid.empty())
        throw DomainError("estimate_hitting_law: empty time grid");
    std::sort(t_grid.begin(), t_grid.end());
    if (!(t_grid.front() >= 0.0))
        throw DomainError("estimate_hitting_law: grid times must be >= 0");

    const double t_max = t_grid.back();
    const long n_steps = static_cast<long>(std::ceil(t_max / dt)) + 1;
    const double inf = std::numeric_limits<double>::infinity();
    const double half = 0.5 * eps;

    PathEstimate est;
    est.t_grid = t_grid;
    est.n_paths = n_paths;
    est.eps = eps;
    est.dt = dt;
    est.seed = seed;
    est.hit_times_eps.assign(n_paths, inf);
    est.hit_times_eps_half.assign(n_paths, inf);

    auto run_block = [&](long i0, long i1) {
        for (long i = i0; i < i1; ++i) {
            // decorrelate the per-path stream from the path index
            Rng rng(seed ^ (0x9E3779B97F4A7C15ULL * (std::uint64_t(i) + 1)));
            double x = x0;
            bool seen_eps = false;
            for (long j = 1; j <= n_steps; ++j) {
                x += sample_stable_increment(p, dt, rng);
                double ax = std::abs(x);
                double tj = static_cast<double>(j) * dt;
                if (!seen_eps && ax < eps) {
                    est.hit_times_eps[i] = tj;
                    seen_eps = true;
                }
                if (ax < half) {
                    est.hit_times_eps_half[i] = tj;
                    break;
                }
            }
        }
    };

    int workers = static_cast<int>(
        std::min<long>(worker_count(), std::max<long>(1, n_paths / 256)));
    if (workers <= 1) {
        run_block(0, n_paths);
    } else {
        std::vector<std::thread> pool;
        long chunk = (n_paths + workers - 1) / workers;
        for (int w = 0; w < workers; ++w) {
            long i0 = w * chunk;
            long i1 = std::min<long>(n_paths, i0 + chunk);
            if (i0 < i1)
                pool.emplace_back(run_block, i0, i1);
        }
        for (auto& th : pool)
            th.join();
    }

    const double n = static_cast<double>(n_paths);
    const double richardson = 1.0 / (std::pow(2.0, p.alpha - 1.0) - 1.0);
    for (double t : t_grid) {
        long alive = 0, alive_half = 0;
        for (long i = 0; i < n_paths; ++i) {
            alive += est.hit_times_eps[i] > t;
            alive_half += est.hit_times_eps_half[i] > t;
        }
        double se = static_cast<double>(alive) / n;
        double sh = static_cast<double>(alive_half) / n;
        est.survival_eps.push_back(se);
        est.survival_eps_half.push_back(sh);
        est.survival_extrapolated.push_back(sh + (sh - se) * richardson);
        est.stderr_eps.push_back(std::sqrt(se * (1.0 - se) / n));
    }
    return est;
}

} // namespace stablehit
