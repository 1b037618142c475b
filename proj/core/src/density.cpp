#include "stablehit/density.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>
#include <string>
#include <utility>

#include "stablehit/errors.hpp"
#include "stablehit/gamma.hpp"
#include "stablehit/inversion.hpp"
#include "stablehit/quadrature.hpp"

namespace stablehit {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kResonanceFloor = 1e-12;
constexpr double kMachineEps = 2.2e-16;

double rho_bar(const StableParams& p, StartSign sign)
{
    return sign == StartSign::Plus ? p.rho_hat : p.rho;
}

// sin(pi * num/den) with exact integer reduction mod 2*den.
double sin_pi_frac(std::int64_t num, std::int64_t den)
{
    std::int64_t r = num % (2 * den);
    if (r < 0)
        r += 2 * den;
    return sin_pi(static_cast<double>(r) / static_cast<double>(den));
}

void check_positive_time(double t)
{
    require_finite(t, "t");
    if (!(t > 0.0))
        throw DomainError("density: t must be > 0");
}

// Numerically bound the constant C2 of the Stirling-type estimate
//   |Gamma(s)/Gamma(alpha s)| < C2 exp(-(a-1) Re s ln Re s + (a-1)|Im s| pi/2)
// by sampling the exact ratio against the envelope shape.  Pure but costly;
// memoised per (alpha, rho) below.
double stirling_ratio_bound(double alpha)
{
    double worst = 0.0;
    for (double x = 0.5; x <= 512.0; x *= 2.0) {
        for (double y = 0.0; y <= 100.0; y += 4.0) {
            Complex s(x, y);
            double lr = (log_gamma(s) - log_gamma(alpha * s)).real();
            double envelope =
                -(alpha - 1.0) * (x * std::log(x) - 0.5 * kPi * y);
            worst = std::max(worst, std::exp(lr - envelope));
        }
    }
    return 1.5 * worst;
}

// J(alpha, r) = int_R cosh(pi a r u)/cosh(pi a u) e^{(a-1)|u| pi/2} du,
// finite because a r + (a-1)/2 < a on the admissible set.
double cosh_ratio_integral(double alpha, double r)
{
    double rate = kPi * (alpha - alpha * r - 0.5 * (alpha - 1.0));
    auto f = [alpha, r](double u) {
        return std::exp(-kPi * (alpha - alpha * r) * u +
                        0.5 * (alpha - 1.0) * kPi * u) *
               (1.0 + std::exp(-2.0 * kPi * alpha * r * u)) /
               (1.0 + std::exp(-2.0 * kPi * alpha * u));
    };
    return 2.0 * detail::integrate_adaptive(f, 0.0, 60.0 / rate, 1e-13);
}

struct PlanConstants {
    double c1;    // sin(pi/alpha)/sin(pi rho_hat)
    double c2;    // Stirling ratio bound
    double j_max; // max over both signs of the cosh-ratio integral
};

const PlanConstants& plan_constants(const StableParams& p)
{
    static std::mutex mu;
    static std::map<std::pair<double, double>, PlanConstants> cache;
    std::lock_guard<std::mutex> guard(mu);
    auto key = std::make_pair(p.alpha, p.rho);
    auto it = cache.find(key);
    if (it == cache.end()) {
        PlanConstants c{sin_pi(1.0 / p.alpha) / sin_pi(p.rho_hat),
                        stirling_ratio_bound(p.alpha),
                        std::max(cosh_ratio_integral(p.alpha, p.rho_hat),
                                 cosh_ratio_integral(p.alpha, p.rho))};
        it = cache.emplace(key, c).first;
    }
    return it->second;
}

struct SeriesAccumulator {
    double sum = 0.0;
    double peak = 0.0; // largest |term|, for the cancellation estimate
    int count = 0;

    void add(double term)
    {
        sum += term;
        peak = std::max(peak, std::abs(term));
        ++count;
    }
    double cancellation_error() const { return peak * kMachineEps * count; }
};

} // namespace

const char* method_name(Method m)
{
    switch (m) {
    case Method::SeriesIrrational: return "series-irrational";
    case Method::SeriesRational: return "series-rational";
    case Method::Asymptotic: return "asymptotic";
    case Method::Inversion: return "inversion";
    }
    return "unknown";
}

double norm_dist(double x)
{
    require_finite(x, "norm_dist");
    return std::abs(x - std::round(x));
}

bool in_K(double alpha, int N)
{
    if (N < 3)
        throw DomainError("in_K: N must be >= 3");
    double threshold =
        std::exp(-0.5 * (alpha - 1.0) * (N - 2) * std::log(double(N - 2)));
    return norm_dist((N - 0.5) * alpha) > threshold;
}

double K_density(double alpha, int n)
{
    if (n < 1)
        throw DomainError("K_density: n must be >= 1");
    int count = 0;
    for (int N = 3; N <= n; ++N)
        if (in_K(alpha, N))
            ++count;
    return static_cast<double>(count) / static_cast<double>(n);
}

TruncationPlan make_truncation_plan_for_N(const StableParams& p, double t,
                                          int N)
{
    check_positive_time(t);
    if (N < 3)
        throw DomainError("truncation plan: N must be >= 3");
    double al = p.alpha;
    double c = N + 0.5 - 1.0 / al;
    const PlanConstants& pc = plan_constants(p);
    double lb = norm_dist(al * (N - 0.5));
    double log_bound = -c * std::log(t) -
                       (al - 1.0) * (c - 1.0) * std::log(c - 1.0) +
                       std::log(pc.c1 * pc.c2 * pc.j_max / (2.0 * kPi * lb));
    return {N, in_K(al, N), std::exp(log_bound)};
}

std::optional<TruncationPlan> make_truncation_plan(const StableParams& p,
                                                   double t, double tol,
                                                   int n_cap)
{
    check_positive_time(t);
    if (!(tol > 0.0))
        throw DomainError("truncation plan: tol must be > 0");
    double al = p.alpha;
    const PlanConstants& pc = plan_constants(p);
    double log_const = std::log(pc.c1 * pc.c2 * pc.j_max / (2.0 * kPi));
    for (int N = 3; N <= n_cap; ++N) {
        if (!in_K(al, N))
            continue;
        double c = N + 0.5 - 1.0 / al;
        double lb = norm_dist(al * (N - 0.5));
        double log_bound = -c * std::log(t) -
                           (al - 1.0) * (c - 1.0) * std::log(c - 1.0) +
                           log_const - std::log(lb);
        if (log_bound <= std::log(tol))
            return TruncationPlan{N, true, std::exp(log_bound)};
    }
    return std::nullopt;
}

double series_term_family1(const StableParams& p, StartSign sign, int k,
                           double t)
{
    check_positive_time(t);
    if (k < 1)
        throw DomainError("series_term_family1: k must be >= 1");
    double al = p.alpha;
    double rb = rho_bar(p, sign);
    double s_num, s_den;
    if (p.alpha_class.kind == AlphaKind::Rational) {
        std::int64_t m = p.alpha_class.m, n = p.alpha_class.n;
        s_den = sin_pi_frac((k + 1) * n, m);
        if (s_den == 0.0)
            throw ClassificationError(
                "series_term_family1: index k = " + std::to_string(k) +
                " is a double pole; use series_term_double_pole");
        s_num = sin_pi_frac(static_cast<std::int64_t>(k) * n, m);
    } else {
        s_den = sin_pi((k + 1) / al);
        if (std::abs(s_den) < kResonanceFloor)
            throw ClassificationError(
                "series_term_family1: resonant denominator at k = " +
                std::to_string(k) + " (alpha is too close to a rational)");
        s_num = sin_pi(k / al);
    }
    double pref = sin_pi(1.0 / al) / (kPi * sin_pi(rb));
    double parity = (k % 2 == 1) ? 1.0 : -1.0; // (-1)^{k-1}
    double e = log_gamma(k / al + 1.0) - log_gamma(double(k) + 1.0) -
               (1.0 + k / al) * std::log(t);
    return pref * sin_pi(rb * (k + 1.0)) * (s_num / s_den) * parity *
           std::exp(e);
}

double series_term_family2(const StableParams& p, StartSign sign, int k,
                           double t)
{
    check_positive_time(t);
    if (k < 1)
        throw DomainError("series_term_family2: k must be >= 1");
    double al = p.alpha;
    double rb = rho_bar(p, sign);
    double s_den;
    if (p.alpha_class.kind == AlphaKind::Rational) {
        std::int64_t m = p.alpha_class.m, n = p.alpha_class.n;
        s_den = sin_pi_frac(static_cast<std::int64_t>(k) * m, n);
        if (s_den == 0.0)
            throw ClassificationError(
                "series_term_family2: index k = " + std::to_string(k) +
                " is a double pole; use series_term_double_pole");
    } else {
        s_den = sin_pi(al * k);
        if (std::abs(s_den) < kResonanceFloor)
            throw ClassificationError(
                "series_term_family2: resonant denominator at k = " +
                std::to_string(k) + " (alpha is too close to a rational)");
    }
    double sp = sin_pi(1.0 / al);
    double pref = -sp * sp / (kPi * sin_pi(rb));
    double e = log_gamma(k - 1.0 / al) - log_gamma(al * k - 1.0) +
               (-double(k) - 1.0 + 1.0 / al) * std::log(t);
    return pref * (sin_pi(al * rb * k) / s_den) * std::exp(e);
}

double rk_value(const StableParams& p, StartSign sign, int k, double t)
{
    check_positive_time(t);
    if (p.alpha_class.kind != AlphaKind::Rational)
        throw ClassificationError("rk_value: alpha must be declared rational");
    if (k < 1)
        throw DomainError("rk_value: k must be >= 1");
    double al = p.alpha;
    double rb = rho_bar(p, sign);
    std::int64_t m = p.alpha_class.m, n = p.alpha_class.n;
    double km = static_cast<double>(k) * static_cast<double>(m);
    double cot = cos_pi(1.0 / al) / sin_pi(1.0 / al);
    return kPi * al * rb * cos_pi(rb * km) -
           sin_pi(rb * km) * (kPi * cot - digamma(k * n - 1.0 / al) +
                              al * digamma(km - 1.0) + std::log(t));
}

double series_term_double_pole(const StableParams& p, StartSign sign, int k,
                               double t)
{
    check_positive_time(t);
    if (p.alpha_class.kind != AlphaKind::Rational)
        throw ClassificationError(
            "series_term_double_pole: alpha must be declared rational");
    if (k < 1)
        throw DomainError("series_term_double_pole: k must be >= 1");
    double al = p.alpha;
    double rb = rho_bar(p, sign);
    std::int64_t m = p.alpha_class.m, n = p.alpha_class.n;
    double sp = sin_pi(1.0 / al);
    double pref = -sp * sp / (kPi * kPi * al * sin_pi(rb));
    double parity = ((k * m) % 2 == 0) ? 1.0 : -1.0; // (-1)^{km}
    double e = log_gamma(k * n - 1.0 / al) - log_gamma(double(k * m) - 1.0) +
               (-double(k * n) - 1.0 + 1.0 / al) * std::log(t);
    return pref * parity * std::exp(e) * rk_value(p, sign, k, t);
}

DensityResult density_irrational(const StableParams& p, StartSign sign,
                                 double t, const TruncationPlan& plan)
{
    check_positive_time(t);
    if (p.alpha_class.kind != AlphaKind::Irrational)
        throw ClassificationError(
            "density_irrational: alpha is not classified irrational");
    if (!plan.in_K)
        throw DomainError("density_irrational: truncation index " +
                          std::to_string(plan.N) +
                          " lacks the K(alpha) certificate");
    double al = p.alpha;
    double x1 = al * (plan.N - 0.5) - 1.0;
    int k1_max = static_cast<int>(std::floor(x1));
    if (static_cast<double>(k1_max) == x1)
        --k1_max; // strict inequality k < alpha(N-1/2)-1

    SeriesAccumulator acc;
    for (int k = 1; k <= k1_max; ++k)
        acc.add(series_term_family1(p, sign, k, t));
    for (int k = 1; k <= plan.N - 1; ++k)
        acc.add(series_term_family2(p, sign, k, t));
    return {acc.sum, Method::SeriesIrrational,
            plan.tail_bound + acc.cancellation_error()};
}

DensityResult density_irrational_unfiltered(const StableParams& p,
                                            StartSign sign, double t,
                                            double tol)
{
    check_positive_time(t);
    if (p.alpha_class.kind != AlphaKind::Irrational)
        throw ClassificationError(
            "density_irrational_unfiltered: alpha is not classified "
            "irrational");
    if (!(tol > 0.0))
        throw DomainError("density_irrational_unfiltered: tol must be > 0");
    // Both series of the unfiltered representation converge whenever alpha
    // avoids the Liouville-type exceptional class; that is the caller's
    // assertion and cannot be checked from a float.
    const double term_tol = 0.1 * tol;
    const int k_cap = 4000;
    SeriesAccumulator acc;
    double tail = 0.0;
    auto sum_series = [&](auto term_fn) {
        int quiet = 0;
        double last = 0.0;
        for (int k = 1; k <= k_cap; ++k) {
            double v = term_fn(k);
            acc.add(v);
            last = std::abs(v);
            quiet = (last < term_tol) ? quiet + 1 : 0;
            if (quiet >= 5)
                break;
        }
        tail += 5.0 * std::max(last, term_tol);
    };
    sum_series([&](int k) { return series_term_family1(p, sign, k, t); });
    sum_series([&](int k) { return series_term_family2(p, sign, k, t); });
    return {acc.sum, Method::SeriesIrrational,
            tail + acc.cancellation_error()};
}

DensityResult density_rational(const StableParams& p, StartSign sign,
                               double t, int k_max)
{
    check_positive_time(t);
    if (p.alpha_class.kind != AlphaKind::Rational)
        throw ClassificationError(
            "density_rational: alpha is not declared rational");
    if (k_max < 1)
        throw DomainError("density_rational: k_max must be >= 1");
    std::int64_t m = p.alpha_class.m, n = p.alpha_class.n;

    SeriesAccumulator acc;
    double tail = 0.0;
    auto run = [&](auto term_fn, auto skip) {
        double prev = 0.0, last = 0.0;
        for (int k = 1; k <= k_max; ++k) {
            if (skip(k))
                continue;
            double v = term_fn(k);
            acc.add(v);
            prev = last;
            last = std::abs(v);
        }
        // geometric tail estimate from the final ratio
        if (prev > 0.0 && last > 0.0) {
            double r = last / prev;
            tail += (r < 0.95) ? last * r / (1.0 - r) : last * 20.0;
        }
    };
    run([&](int k) { return series_term_family1(p, sign, k, t); },
        [&](int k) { return (k + 1) % m == 0; });
    run([&](int k) { return series_term_family2(p, sign, k, t); },
        [&](int k) { return k % n == 0; });
    run([&](int k) { return series_term_double_pole(p, sign, k, t); },
        [](int) { return false; });
    return {acc.sum, Method::SeriesRational, tail + acc.cancellation_error()};
}

DensityResult density_asymptotic_small_t(const StableParams& p,
                                         StartSign sign, double t, double c)
{
    check_positive_time(t);
    if (!(c > 0.0))
        throw DomainError("density_asymptotic_small_t: c must be > 0");
    double al = p.alpha;
    double rb = rho_bar(p, sign);
    double pref = al * sin_pi(1.0 / al) / (kPi * sin_pi(rb));
    double sum = 0.0;
    int n = 1;
    for (; n < 1.0 + c; ++n) {
        double parity = (n % 2 == 1) ? 1.0 : -1.0;
        double e = log_gamma(al * n + 1.0) - log_gamma(n + 1.0 / al) +
                   (n - 1.0 + 1.0 / al) * std::log(t);
        sum += pref * sin_pi(al * rb * n) * parity * std::exp(e);
    }
    // First omitted term, with the oscillating sine replaced by 1.
    double e_next = log_gamma(al * n + 1.0) - log_gamma(n + 1.0 / al) +
                    (n - 1.0 + 1.0 / al) * std::log(t);
    return {sum, Method::Asymptotic, std::abs(pref) * std::exp(e_next)};
}

double density_tail_coefficient(const StableParams& p, StartSign sign)
{
    return series_term_family2(p, sign, 1, 1.0);
}

DensityResult density(const StableParams& p, StartSign sign, double t,
                      double tol, const DensityOptions& opts)
{
    check_positive_time(t);
    if (!(tol > 0.0))
        throw DomainError("density: tol must be > 0");

    const AlphaKind kind = p.alpha_class.kind;

    if (opts.liouville_unsafe) {
        if (kind != AlphaKind::Irrational)
            throw ClassificationError(
                "density: liouville_unsafe applies to irrational alpha only");
        return density_irrational_unfiltered(p, sign, t, tol);
    }

    if (t < kSmallTCrossover) {
        DensityResult r = density_asymptotic_small_t(p, sign, t, 2.0);
        if (r.err_estimate <= tol)
            return r;
        return invert_density(p, sign, t, tol);
    }

    if (kind == AlphaKind::Rational) {
        int k_max = opts.terms.value_or(200);
        DensityResult r = density_rational(p, sign, t, k_max);
        if (r.err_estimate <= tol)
            return r;
        return invert_density(p, sign, t, tol);
    }

    if (kind == AlphaKind::Irrational) {
        if (opts.terms) {
            TruncationPlan plan =
                make_truncation_plan_for_N(p, t, *opts.terms);
            return density_irrational(p, sign, t, plan);
        }
        auto plan = make_truncation_plan(p, t, tol);
        if (plan) {
            DensityResult r = density_irrational(p, sign, t, *plan);
            if (r.err_estimate <= tol)
                return r;
        }
        return invert_density(p, sign, t, tol);
    }

    // NearRational: neither series representation is trustworthy.
    return invert_density(p, sign, t, tol);
}

} // namespace stablehit
