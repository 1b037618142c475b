#include "stablehit/mellin.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "stablehit/errors.hpp"
#include "stablehit/gamma.hpp"
#include "stablehit/map_exponent.hpp"

namespace stablehit {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kPoleRefusalRadius = 1e-6;
constexpr double kLogOverflowGuard = 700.0;

double rho_bar(const StableParams& p, StartSign sign)
{
    return sign == StartSign::Plus ? p.rho_hat : p.rho;
}

void check_strip(const StableParams& p, Complex s)
{
    if (!(s.real() > mellin_strip_lo(p) && s.real() < mellin_strip_hi(p)))
        throw StripError("mellin_T0: Re s = " + std::to_string(s.real()) +
                         " outside (-1/alpha, 2-1/alpha)");
}

} // namespace

// Distance from s to the nearest pole of the transform.
double pole_distance(const StableParams& p, Complex s)
{
    double al = p.alpha;
    double d = std::numeric_limits<double>::infinity();
    auto probe = [&](double pole) {
        d = std::min(d, std::abs(s - Complex(pole, 0.0)));
    };
    // family1: 1 + n/alpha, n >= 1
    double g1 = std::round(al * (s.real() - 1.0));
    for (double n = g1 - 1.0; n <= g1 + 1.0; n += 1.0)
        if (n >= 1.0)
            probe(1.0 + n / al);
    // family2: n - 1/alpha, n >= 2
    double g2 = std::round(s.real() + 1.0 / al);
    for (double n = g2 - 1.0; n <= g2 + 1.0; n += 1.0)
        if (n >= 2.0)
            probe(n - 1.0 / al);
    // family3: -n - 1/alpha, n >= 0
    double g3 = std::round(-s.real() - 1.0 / al);
    for (double n = g3 - 1.0; n <= g3 + 1.0; n += 1.0)
        if (n >= 0.0)
            probe(-n - 1.0 / al);
    return d;
}

namespace {

bool is_gamma_pole(Complex w)
{
    return w.imag() == 0.0 && w.real() <= 0.0 &&
           w.real() == std::floor(w.real());
}

// Closed form
//   h(s) = sin(pi/alpha)/sin(pi rb)
//          * sin(pi rb w) / sin((pi/alpha) w)
//          * Gamma(1+alpha-alpha s) / Gamma(2-s),   w = 1-alpha+alpha s,
// with rb = rho_hat (sign Plus) or rho (sign Minus).  Sines in log space;
// the removable point w = 0 is expanded explicitly.
Complex h_closed_form(const StableParams& p, StartSign sign, Complex s)
{
    double al = p.alpha;
    double rb = rho_bar(p, sign);
    Complex w = 1.0 - al + al * s;
    double pref = std::log(sin_pi(1.0 / al)) - std::log(sin_pi(rb));

    if (std::abs(w) < 1e-4) {
        // sin(pi rb w)/sin(pi w/alpha) -> alpha rb as w -> 0.
        Complex a = kPi * rb * w;
        Complex b = kPi * w / al;
        Complex ratio = (al * rb) *
                        (1.0 - a * a / 6.0 + a * a * a * a / 120.0) /
                        (1.0 - b * b / 6.0 + b * b * b * b / 120.0);
        return std::exp(pref + log_gamma(1.0 + al - al * s) -
                        log_gamma(2.0 - s)) *
               ratio;
    }

    Complex L = pref + log_sin(kPi * rb * w) - log_sin(kPi * w / al) +
                log_gamma(1.0 + al - al * s) - log_gamma(2.0 - s);
    if (L.real() > kLogOverflowGuard)
        throw ToleranceError("mellin transform overflows despite log-space "
                             "evaluation");
    return std::exp(L);
}

} // namespace

MellinValue mellin_T0(const StableParams& p, StartSign sign, Complex s)
{
    require_finite(s, "mellin_T0");
    check_strip(p, s);
    return {h_closed_form(p, sign, s), s, mellin_strip_lo(p),
            mellin_strip_hi(p)};
}

double mellin_T0(const StableParams& p, StartSign sign, double s)
{
    require_finite(s, "mellin_T0");
    check_strip(p, Complex(s, 0.0));
    double al = p.alpha;
    double rb = rho_bar(p, sign);
    double w = 1.0 - al + al * s;
    double pref = sin_pi(1.0 / al) / sin_pi(rb);
    double ratio;
    if (std::abs(w) < 1e-4) {
        double a = kPi * rb * w;
        double b = kPi * w / al;
        ratio = (al * rb) * (1.0 - a * a / 6.0 + a * a * a * a / 120.0) /
                (1.0 - b * b / 6.0 + b * b * b * b / 120.0);
    } else {
        ratio = sin_pi(rb * w) / sin_pi(w / al);
    }
    // Both gamma arguments are positive inside the strip.
    return pref * ratio *
           std::exp(log_gamma(1.0 + al - al * s) - log_gamma(2.0 - s));
}

Complex mellin_T0_continuation(const StableParams& p, StartSign sign,
                               Complex s)
{
    require_finite(s, "mellin_T0_continuation");
    if (pole_distance(p, s) < kPoleRefusalRadius)
        throw PoleError("mellin_T0_continuation: refusing to evaluate within "
                        "1e-6 of a pole of the transform");
    // Zeros of the transform at s = 2, 3, ... come from the Gamma(2-s)
    // pole in the denominator.
    if (is_gamma_pole(2.0 - s))
        return 0.0;
    return h_closed_form(p, sign, s);
}

MellinValue mellin_symmetric(double alpha, Complex s)
{
    StableParams p = make_params(alpha, 0.5);
    require_finite(s, "mellin_symmetric");
    check_strip(p, s);
    // sin(pi/alpha) cos(pi alpha (s-1)/2) / sin(pi(s-1+1/alpha))
    //   * Gamma(1+alpha-alpha s)/Gamma(2-s)
    Complex sm1 = s - 1.0;
    Complex L = std::log(sin_pi(1.0 / alpha)) +
                log_cos(0.5 * kPi * alpha * sm1) -
                log_sin(kPi * (sm1 + 1.0 / alpha)) +
                log_gamma(1.0 + alpha - alpha * s) - log_gamma(2.0 - s);
    if (L.real() > kLogOverflowGuard)
        throw ToleranceError("mellin_symmetric overflows despite log-space "
                             "evaluation");
    return {std::exp(L), s, mellin_strip_lo(p), mellin_strip_hi(p)};
}

double functional_equation_residual(const StableParams& p, double s)
{
    if (!(s > 0.0 && s < 1.0 - 1.0 / p.alpha))
        throw DomainError("functional_equation_residual: s must lie in "
                          "(0, 1-1/alpha)");
    Matrix2 A = matrix_A(p, s);
    double h1 = mellin_T0(p, StartSign::Plus, s);
    double h2 = mellin_T0(p, StartSign::Minus, s);
    double g1 = mellin_T0(p, StartSign::Plus, s + 1.0);
    double g2 = mellin_T0(p, StartSign::Minus, s + 1.0);
    double r1 = A(0, 0) * h1 + A(0, 1) * h2 - g1;
    double r2 = A(1, 0) * h1 + A(1, 1) * h2 - g2;
    return std::max(std::abs(r1), std::abs(r2));
}

PoleCatalog pole_catalog(const StableParams& p, int n_max)
{
    if (n_max < 2)
        throw DomainError("pole_catalog: n_max must be >= 2");
    double al = p.alpha;
    const AlphaClass& cls = p.alpha_class;
    bool rational = cls.kind == AlphaKind::Rational;

    PoleCatalog cat;
    for (int n = 1; n <= n_max; ++n) {
        // family1 index n collides with family2 when n = k m - 1.
        if (rational && (n + 1) % cls.m == 0)
            continue;
        cat.family1.push_back(1.0 + n / al);
    }
    for (int n = 2; n <= n_max; ++n) {
        // family2 index n collides with family1 when n = k n_den + 1.
        if (rational && (n - 1) % cls.n == 0)
            continue;
        cat.family2.push_back(n - 1.0 / al);
    }
    for (int n = 0; n <= n_max; ++n)
        cat.family3.push_back(-n - 1.0 / al);
    if (rational) {
        // Double poles at s = 1 + k n_den - 1/alpha while either colliding
        // index stays within n_max.
        for (std::int64_t k = 1; k * cls.m - 1 <= n_max; ++k)
            cat.double_poles.push_back(1.0 + static_cast<double>(k * cls.n) -
                                       1.0 / al);
    }
    return cat;
}

std::optional<DecayEnvelope> decay_envelope(const StableParams& p, Complex s)
{
    constexpr double kC0 = 10.0;
    double y = std::abs(s.imag());
    if (y <= kC0)
        return std::nullopt;
    return DecayEnvelope{std::exp(-kPi * y),
                         std::exp(-0.5 * kPi * (p.alpha - 1.0) * y)};
}

bool envelope_check(const StableParams& p, StartSign sign, Complex s)
{
    auto env = decay_envelope(p, s);
    if (!env)
        return false;
    double h = std::abs(mellin_T0_continuation(p, sign, s));
    return env->lower < h && h < env->upper;
}

} // namespace stablehit
