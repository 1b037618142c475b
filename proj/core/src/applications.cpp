#include "stablehit/applications.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "stablehit/density.hpp"
#include "stablehit/errors.hpp"
#include "stablehit/gamma.hpp"
#include "stablehit/inversion.hpp"
#include "stablehit/quadrature.hpp"

namespace stablehit {

namespace {

constexpr double kPi = std::numbers::pi;

// E_i[ u^{-1} f(sgn (t/u)^{1/alpha}) ] against the density p_i, by log-axis
// quadrature with analytic power-law head and tail corrections.
double entrance_expectation(const StableParams& p, StartSign start,
                            double sgn, double t, const TestFunction& tf,
                            double tol)
{
    // p_i(u) ~ c_head u^{1/alpha} at 0 and ~ P u^{1/alpha-2} at infinity.
    double c_head =
        std::abs(density_asymptotic_small_t(p, start, 1.0, 1.0).value);
    c_head = std::max(c_head, 1e-3);
    double tail_p = std::abs(density_tail_coefficient(p, start));
    double budget = 0.2 * tol / std::max(tf.bound, 1e-12);

    // Head: |int_0^lo u^{-1} f p du| <= bound c_head alpha lo^{1/alpha}.
    double lo = std::pow(budget / (c_head * p.alpha), p.alpha);
    lo = std::min(lo, 1e-3);
    // Tail: |int_hi^inf| <= bound P hi^{1/alpha-2}/(2-1/alpha).
    double hi = std::pow(budget * (2.0 - 1.0 / p.alpha) / tail_p,
                         1.0 / (1.0 / p.alpha - 2.0));
    hi = std::max(hi, 1e3);

    // Density error integrates against bound/u, so a budget linear in u
    // keeps the total within 0.2 tol over [lo, hi].
    auto g = [&](double u) {
        double x = sgn * std::pow(t / u, 1.0 / p.alpha);
        double tol_u = std::max(
            1e-14, 0.2 * tol * u / (std::max(tf.bound, 1e-12) * (hi - lo)));
        return tf.f(x) * density(p, start, u, tol_u).value / u;
    };
    return detail::integrate_log_axis(g, lo, hi, 0.4 * tol);
}

} // namespace

double h_function(const StableParams& p, double x)
{
    require_finite(x, "h_function");
    if (x == 0.0)
        throw DomainError("h_function: x must be nonzero");
    double rb = x > 0.0 ? p.rho_hat : p.rho;
    SignedLog g = log_abs_gamma(1.0 - p.alpha); // negative on (1,2)
    return -g.sign * std::exp(g.log) * sin_pi(p.alpha * rb) / kPi *
           std::pow(std::abs(x), p.alpha - 1.0);
}

double excursion_coefficient(const StableParams& p)
{
    return (p.alpha - 1.0) / std::exp(log_gamma(1.0 / p.alpha)) *
           sin_pi(1.0 / p.alpha) / cos_pi(p.rho - 0.5);
}

double excursion_length_density(const StableParams& p, double t)
{
    require_finite(t, "excursion_length_density");
    if (!(t > 0.0))
        throw DomainError("excursion_length_density: t must be > 0");
    return excursion_coefficient(p) * std::pow(t, 1.0 / p.alpha - 2.0);
}

double excursion_length_tail(const StableParams& p, double t)
{
    require_finite(t, "excursion_length_tail");
    if (!(t > 0.0))
        throw DomainError("excursion_length_tail: t must be > 0");
    return excursion_coefficient(p) * std::pow(t, 1.0 / p.alpha - 1.0) /
           (1.0 - 1.0 / p.alpha);
}

double ratio_Y(const StableParams& p, double x, double s, double tol)
{
    require_finite(x, "ratio_Y");
    if (x == 0.0)
        throw DomainError("ratio_Y: x must be nonzero");
    if (!(s > 0.0))
        throw DomainError("ratio_Y: s must be > 0");
    StartSign sign = x > 0.0 ? StartSign::Plus : StartSign::Minus;
    double s_unit = std::pow(std::abs(x), -p.alpha) * s; // scaling reduction
    double surv = survival(p, sign, s_unit, tol);
    // h and n(zeta > s) regroup under the same scaling: h(x) n(zeta>s) =
    // h(sgn x) n(zeta > s_unit) exactly, so evaluate at the unit point.
    return surv / (h_function(p, x > 0.0 ? 1.0 : -1.0) *
                   excursion_length_tail(p, s_unit));
}

double entrance_law_density(const StableParams& p, double t, double x,
                            double tol)
{
    require_finite(x, "entrance_law_density");
    if (x == 0.0)
        throw DomainError("entrance_law_density: x must be nonzero");
    if (!(t > 0.0))
        throw DomainError("entrance_law_density: t must be > 0");
    StartSign dual_sign = x > 0.0 ? StartSign::Minus : StartSign::Plus;
    double scale = std::pow(std::abs(x), -p.alpha);
    return scale *
           density(p, dual_sign, scale * t, std::max(1e-14, tol / scale))
               .value;
}

double conditioned_entrance(const StableParams& p, double t,
                            const TestFunction& tf, double tol)
{
    if (!tf.f)
        throw DomainError("conditioned_entrance: missing test function");
    if (!(t > 0.0))
        throw DomainError("conditioned_entrance: t must be > 0");
    SignedLog g = log_abs_gamma(-p.alpha); // positive on (-2,-1)
    double gamma_neg_alpha = g.sign * std::exp(g.log);
    double w1 = gamma_neg_alpha * sin_pi(p.alpha * p.rho) / kPi;
    double w2 = gamma_neg_alpha * sin_pi(p.alpha * p.rho_hat) / kPi;
    double budget = tol / (2.0 * std::max({1.0, std::abs(w1), std::abs(w2)}));
    double e1 = entrance_expectation(p, StartSign::Plus, -1.0, t, tf, budget);
    double e2 = entrance_expectation(p, StartSign::Minus, +1.0, t, tf, budget);
    return w1 * e1 + w2 * e2;
}

} // namespace stablehit
