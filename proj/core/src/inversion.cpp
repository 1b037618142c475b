#include "stablehit/inversion.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "stablehit/errors.hpp"
#include "stablehit/gamma.hpp"
#include "stablehit/mellin.hpp"
#include "stablehit/quadrature.hpp"

namespace stablehit {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kMaxHalfWidth = 20000.0;

double rho_bar(const StableParams& p, StartSign sign)
{
    return sign == StartSign::Plus ? p.rho_hat : p.rho;
}

} // namespace

ContourSpec plan_contour(const StableParams& p, double t, double tol,
                         double abscissa)
{
    require_finite(t, "plan_contour");
    if (!(t > 0.0 && tol > 0.0))
        throw DomainError("plan_contour: t and tol must be > 0");
    if (pole_distance(p, Complex(abscissa, 0.0)) < 1e-3)
        throw PoleError("plan_contour: abscissa within 1e-3 of a pole");
    double rate = 0.5 * kPi * (p.alpha - 1.0);
    // Tail of the contour integral beyond U, via the decay envelope:
    //   t^{-c} e^{-rate U} / (pi rate) <= tol/2  (and the same without the
    //   t^{-c} factor, whichever is stricter).
    double lt = std::max(0.0, -std::log(t) * abscissa);
    double u = (lt + std::log(2.0 / (kPi * rate * tol))) / rate;
    u = std::max(u, 15.0);
    if (u > kMaxHalfWidth)
        throw ToleranceError("plan_contour: required half-width " +
                             std::to_string(u) + " exceeds the guard");
    double osc = std::max(1.0, std::abs(std::log(t)));
    int panels = static_cast<int>(std::ceil(2.0 * u / std::min(2.0, kPi / osc)));
    return {abscissa, u, 15 * panels};
}

DensityResult invert_density_at(const StableParams& p, StartSign sign,
                                double t, double tol, double abscissa)
{
    ContourSpec spec = plan_contour(p, t, tol, abscissa);
    double lnt = std::log(t);
    auto integrand = [&](double u) -> Complex {
        Complex s(spec.abscissa, u);
        return mellin_T0_continuation(p, sign, s) *
               std::exp(-s * lnt); // t^{-s}
    };
    // Panels sized by the oscillation scale of e^{-iu ln t}.
    double width = std::min(2.0, kPi / std::max(1.0, std::abs(lnt)));
    int n_panels =
        static_cast<int>(std::ceil(2.0 * spec.half_width / width));
    double quad_tol = kPi * tol; // integral-level budget for p-level tol/2
    Complex total = 0.0;
    double quad_err = 0.0;
    double a = -spec.half_width;
    for (int i = 0; i < n_panels; ++i) {
        double b = (i + 1 == n_panels)
                       ? spec.half_width
                       : -spec.half_width + (i + 1) * 2.0 * spec.half_width /
                                                n_panels;
        double perr = 0.0;
        total += detail::integrate_adaptive(integrand, a, b,
                                            quad_tol / n_panels, 24, &perr);
        quad_err += perr;
        a = b;
    }
    total /= 2.0 * kPi;
    quad_err /= 2.0 * kPi;
    double tail = std::exp(-0.5 * kPi * (p.alpha - 1.0) * spec.half_width) *
                  std::exp(-spec.abscissa * lnt) /
                  (kPi * 0.5 * kPi * (p.alpha - 1.0));
    double err = quad_err + tail + std::abs(total.imag());
    return {total.real(), Method::Inversion, err};
}

DensityResult invert_density(const StableParams& p, StartSign sign, double t,
                             double tol)
{
    return invert_density_at(p, sign, t, tol, 1.0);
}

double asymptotic_head_mass(const StableParams& p, StartSign sign, double b,
                            double* err_out)
{
    require_finite(b, "asymptotic_head_mass");
    if (!(b > 0.0))
        throw DomainError("asymptotic_head_mass: b must be > 0");
    double al = p.alpha;
    double rb = rho_bar(p, sign);
    double pref = al * sin_pi(1.0 / al) / (kPi * sin_pi(rb));
    // Integrate the expansion term by term and truncate where the term
    // bounds stop decreasing (optimal truncation of a divergent series).
    double sum = 0.0;
    double prev_bound = std::numeric_limits<double>::infinity();
    double err = 0.0;
    for (int n = 1; n <= 12; ++n) {
        double mag = std::abs(pref) *
                     std::exp(log_gamma(al * n + 1.0) -
                              log_gamma(n + 1.0 / al) +
                              (n + 1.0 / al) * std::log(b)) /
                     (n + 1.0 / al);
        if (mag >= prev_bound) {
            err = prev_bound;
            break;
        }
        double parity = (n % 2 == 1) ? 1.0 : -1.0;
        sum += pref * sin_pi(al * rb * n) * parity *
               std::exp(log_gamma(al * n + 1.0) - log_gamma(n + 1.0 / al) +
                        (n + 1.0 / al) * std::log(b)) /
               (n + 1.0 / al);
        prev_bound = mag;
        err = mag;
    }
    if (err_out)
        *err_out = err;
    return sum;
}

double survival(const StableParams& p, StartSign sign, double t, double tol)
{
    require_finite(t, "survival");
    if (!(t >= 0.0))
        throw DomainError("survival: t must be >= 0");
    if (!(tol > 0.0))
        throw DomainError("survival: tol must be > 0");

    const double P = density_tail_coefficient(p, sign);
    const double c1 = std::abs(series_term_family1(p, sign, 1, 1.0));
    // One-term closed tail P T^{1/alpha-1}/(1-1/alpha); its error is
    // dominated by the first family-1 term, |c1| alpha T^{-1/alpha}.
    const double t_star =
        std::max(100.0, std::pow(4.0 * p.alpha * c1 / tol, p.alpha));
    auto closed_tail = [&](double T) {
        return P * std::pow(T, 1.0 / p.alpha - 1.0) / (1.0 - 1.0 / p.alpha);
    };
    if (t >= t_star)
        return closed_tail(t);

    const double t_head = 0.02;
    double mass = closed_tail(t_star);
    double lo = std::max(t, t_head);
    // Density requests scaled to the local magnitude so the integrated
    // density error stays within tol/4.
    auto p_fn = [&](double u) {
        double scale = std::min(1.0, std::abs(P) * std::pow(u, 1.0 / p.alpha - 2.0));
        double tol_u = std::max(1e-13, 0.25 * tol * scale);
        return density(p, sign, u, tol_u).value;
    };
    mass += detail::integrate_log_axis(p_fn, lo, t_star, 0.25 * tol);
    if (t < t_head)
        mass += asymptotic_head_mass(p, sign, t_head) -
                (t > 0.0 ? asymptotic_head_mass(p, sign, t) : 0.0);
    return mass;
}

} // namespace stablehit
