#include "stablehit/params.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "stablehit/errors.hpp"
#include "stablehit/gamma.hpp"

namespace stablehit {

namespace {

constexpr double kPi = std::numbers::pi;

void check_alpha_range(double alpha)
{
    require_finite(alpha, "alpha");
    if (!(alpha > 1.0))
        throw DomainError("alpha = " + std::to_string(alpha) +
                          " violates alpha > 1");
    if (!(alpha < 2.0))
        throw DomainError("alpha = " + std::to_string(alpha) +
                          " violates alpha < 2");
}

} // namespace

AlphaClass classify_alpha(double alpha, std::optional<Fraction> declared)
{
    check_alpha_range(alpha);
    if (declared) {
        std::int64_t m = declared->num;
        std::int64_t n = declared->den;
        if (n <= 0 || m <= 0)
            throw DomainError("declared fraction must be positive");
        std::int64_t g = std::gcd(m, n);
        m /= g;
        n /= g;
        if (!(m > n && m < 2 * n))
            throw DomainError("declared fraction " + std::to_string(m) + "/" +
                              std::to_string(n) + " is not in (1,2)");
        return {AlphaKind::Rational, m, n, 0.0};
    }

    // Continued-fraction convergents p/q of the float; the convergents are
    // the best rational approximations, so checking them is enough.
    std::int64_t p_prev = 1, q_prev = 0;
    std::int64_t p = static_cast<std::int64_t>(std::floor(alpha));
    std::int64_t q = 1;
    double x = alpha;
    for (int iter = 0; iter < 64; ++iter) {
        double frac = x - std::floor(x);
        double approx = static_cast<double>(p) / static_cast<double>(q);
        double dist = std::abs(alpha - approx);
        if (q > 1 && q <= kNearRationalMaxDen && dist < kNearRationalDelta)
            return {AlphaKind::NearRational, p, q, dist};
        if (q > kNearRationalMaxDen || frac < 1e-15)
            break;
        x = 1.0 / frac;
        std::int64_t a = static_cast<std::int64_t>(std::floor(x));
        std::int64_t p_next = a * p + p_prev;
        std::int64_t q_next = a * q + q_prev;
        p_prev = p;
        q_prev = q;
        p = p_next;
        q = q_next;
    }
    return {AlphaKind::Irrational, 0, 0, 0.0};
}

StableParams make_params(double alpha, double rho)
{
    check_alpha_range(alpha);
    require_finite(rho, "rho");
    double lo = 1.0 - 1.0 / alpha;
    double hi = 1.0 / alpha;
    if (!(rho > lo))
        throw DomainError("rho = " + std::to_string(rho) +
                          " violates rho > 1 - 1/alpha = " + std::to_string(lo));
    if (!(rho < hi))
        throw DomainError("rho = " + std::to_string(rho) +
                          " violates rho < 1/alpha = " + std::to_string(hi));
    StableParams p;
    p.alpha = alpha;
    p.rho = rho;
    p.rho_hat = 1.0 - rho;
    p.alpha_class = classify_alpha(alpha);
    return p;
}

StableParams make_params(Fraction alpha, double rho)
{
    AlphaClass cls = classify_alpha(
        static_cast<double>(alpha.num) / static_cast<double>(alpha.den),
        alpha);
    StableParams p = make_params(
        static_cast<double>(cls.m) / static_cast<double>(cls.n), rho);
    p.alpha_class = cls;
    return p;
}

double StableParams::c_plus() const
{
    return std::exp(log_gamma(alpha + 1.0)) * sin_pi(alpha * rho) / kPi;
}

double StableParams::c_minus() const
{
    return std::exp(log_gamma(alpha + 1.0)) * sin_pi(alpha * rho_hat) / kPi;
}

double StableParams::beta() const
{
    double cp = c_plus();
    double cm = c_minus();
    return (cp - cm) / (cp + cm);
}

double StableParams::scale_c() const
{
    return cos_pi(alpha * (rho - 0.5));
}

StableParams StableParams::dual() const
{
    StableParams d = *this;
    d.rho = rho_hat;
    d.rho_hat = rho;
    return d;
}

} // namespace stablehit
