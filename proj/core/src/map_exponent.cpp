#include "stablehit/map_exponent.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "stablehit/errors.hpp"
#include "stablehit/gamma.hpp"

namespace stablehit {

namespace {

constexpr double kPi = std::numbers::pi;

bool is_gamma_pole(Complex w)
{
    return w.imag() == 0.0 && w.real() <= 0.0 &&
           w.real() == std::floor(w.real());
}

void check_F_strip(const StableParams& p, double re_z)
{
    if (!(re_z > -1.0 && re_z < 1.0 / p.alpha))
        throw StripError("stable_F: Re z = " + std::to_string(re_z) +
                         " outside (-1, 1/alpha)");
}

void check_B_strip(const StableParams& p, Complex s)
{
    if (!(s.real() > -1.0 / p.alpha && s.real() < 1.0))
        throw StripError("matrix_B: Re s outside (-1/alpha, 1)");
    if (s == Complex(0.0, 0.0))
        throw PoleError("matrix_B: pole at s = 0");
}

void check_A_strip(const StableParams& p, Complex s)
{
    if (!(s.real() > 1.0 - 2.0 / p.alpha && s.real() < 1.0 - 1.0 / p.alpha))
        throw StripError("matrix_A: Re s outside (1-2/alpha, 1-1/alpha)");
}

} // namespace

Matrix2c build_map_exponent(const std::array<ExponentFn, 2>& psi,
                            const Matrix2& Q,
                            const std::array<std::array<ExponentFn, 2>, 2>& G,
                            Complex z)
{
    double scale = std::abs(Q(0, 0)) + std::abs(Q(1, 1)) + 1.0;
    if (Q(0, 1) < 0.0 || Q(1, 0) < 0.0)
        throw DomainError("build_map_exponent: negative off-diagonal rate");
    if (std::abs(Q.row_sum(0)) > 1e-12 * scale ||
        std::abs(Q.row_sum(1)) > 1e-12 * scale)
        throw DomainError("build_map_exponent: generator rows must sum to 0 "
                          "(killing is not supported)");

    Matrix2c F;
    F.argument = z;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            Complex g = 1.0;
            if (G[i][j]) {
                g = G[i][j](z);
                require_finite(g, "build_map_exponent: G");
                if (i == j && std::abs(g - 1.0) > 1e-12)
                    throw DomainError(
                        "build_map_exponent: diagonal G entries must be 1");
            }
            F(i, j) = Q(i, j) * g;
        }
        if (!psi[i])
            throw DomainError("build_map_exponent: missing exponent function");
        Complex d = psi[i](z);
        require_finite(d, "build_map_exponent: psi");
        F(i, i) += d;
    }
    return F;
}

// F(z) written with 1/(Gamma(a)Gamma(1-a)) = sin(pi a)/pi, which removes
// every denominator pole from the closed form.
Matrix2c stable_F(const StableParams& p, Complex z)
{
    check_F_strip(p, z.real());
    double al = p.alpha;
    Complex pref =
        std::exp(log_gamma(al * (1.0 + z)) + log_gamma(1.0 - al * z)) / kPi;
    Complex s_hat = std::sin(kPi * (al * p.rho_hat + al * z));
    Complex s_rho = std::sin(kPi * (al * p.rho + al * z));
    Matrix2c F;
    F.argument = z;
    F(0, 0) = -pref * s_hat;
    F(0, 1) = pref * sin_pi(al * p.rho_hat);
    F(1, 0) = pref * sin_pi(al * p.rho);
    F(1, 1) = -pref * s_rho;
    return F;
}

Matrix2 stable_F(const StableParams& p, double z)
{
    check_F_strip(p, z);
    double al = p.alpha;
    double pref =
        std::exp(log_gamma(al * (1.0 + z)) + log_gamma(1.0 - al * z)) / kPi;
    Matrix2 F;
    F.argument = z;
    F(0, 0) = -pref * sin_pi(al * (p.rho_hat + z));
    F(0, 1) = pref * sin_pi(al * p.rho_hat);
    F(1, 0) = pref * sin_pi(al * p.rho);
    F(1, 1) = -pref * sin_pi(al * (p.rho + z));
    return F;
}

Matrix2c matrix_B(const StableParams& p, Complex s)
{
    check_B_strip(p, s);
    double al = p.alpha;
    Complex pref = (al / kPi) *
                   std::exp(log_gamma(al - al * s) + log_gamma(al * s));
    Matrix2c B;
    B.argument = s;
    B(0, 0) = pref * std::sin(kPi * al * (p.rho_hat - s));
    B(0, 1) = -pref * sin_pi(al * p.rho_hat);
    B(1, 0) = -pref * sin_pi(al * p.rho);
    B(1, 1) = pref * std::sin(kPi * al * (p.rho - s));
    return B;
}

Matrix2 matrix_B(const StableParams& p, double s)
{
    check_B_strip(p, Complex(s, 0.0));
    double al = p.alpha;
    SignedLog g1 = log_abs_gamma(al - al * s);
    SignedLog g2 = log_abs_gamma(al * s);
    double pref = (al / kPi) * g1.sign * g2.sign * std::exp(g1.log + g2.log);
    Matrix2 B;
    B.argument = s;
    B(0, 0) = pref * sin_pi(al * (p.rho_hat - s));
    B(0, 1) = -pref * sin_pi(al * p.rho_hat);
    B(1, 0) = -pref * sin_pi(al * p.rho);
    B(1, 1) = pref * sin_pi(al * (p.rho - s));
    return B;
}

Matrix2c matrix_A(const StableParams& p, Complex s)
{
    check_A_strip(p, s);
    double al = p.alpha;
    Complex pref = (-1.0 / (kPi * al)) *
                   std::exp(log_gamma(1.0 - al + al * s) +
                            log_gamma(1.0 - al * s));
    Matrix2c A;
    A.argument = s;
    A(0, 0) = pref * std::sin(kPi * al * (p.rho - s));
    A(0, 1) = pref * sin_pi(al * p.rho_hat);
    A(1, 0) = pref * sin_pi(al * p.rho);
    A(1, 1) = pref * std::sin(kPi * al * (p.rho_hat - s));
    return A;
}

Matrix2 matrix_A(const StableParams& p, double s)
{
    check_A_strip(p, Complex(s, 0.0));
    double al = p.alpha;
    SignedLog g1 = log_abs_gamma(1.0 - al + al * s);
    SignedLog g2 = log_abs_gamma(1.0 - al * s);
    double pref = (-1.0 / (kPi * al)) * g1.sign * g2.sign *
                  std::exp(g1.log + g2.log);
    Matrix2 A;
    A.argument = s;
    A(0, 0) = pref * sin_pi(al * (p.rho - s));
    A(0, 1) = pref * sin_pi(al * p.rho_hat);
    A(1, 0) = pref * sin_pi(al * p.rho);
    A(1, 1) = pref * sin_pi(al * (p.rho_hat - s));
    return A;
}

std::pair<Matrix2c, Matrix2c> B_and_A(const StableParams& p, Complex s)
{
    return {matrix_B(p, s), matrix_A(p, s)};
}

Complex det_B_closed_form(const StableParams& p, Complex s)
{
    check_B_strip(p, s);
    double al = p.alpha;
    return -al * al *
           std::exp(log_gamma(al - al * s) + log_gamma(al * s) -
                    log_gamma(1.0 - al + al * s) - log_gamma(1.0 - al * s));
}

std::array<double, 2> stationary_distribution(const Matrix2& Q)
{
    double q12 = Q(0, 1);
    double q21 = Q(1, 0);
    if (!(q12 > 0.0 && q21 > 0.0))
        throw DomainError("stationary_distribution: chain must be irreducible");
    double total = q12 + q21;
    return {q21 / total, q12 / total};
}

PerronData leading_eigenvalue(const Matrix2& F, const std::array<double, 2>& pi)
{
    require_finite(F(0, 0), "leading_eigenvalue");
    require_finite(F(1, 1), "leading_eigenvalue");
    double tr = F.trace();
    double dt = F.det();
    double disc = (F(0, 0) - F(1, 1)) * (F(0, 0) - F(1, 1)) +
                  4.0 * F(0, 1) * F(1, 0);
    if (!(disc > 0.0))
        throw DomainError("leading_eigenvalue: eigenvalues coincide");
    double root = std::sqrt(disc);
    // Larger root of lambda^2 - tr lambda + det, cancellation-free branch.
    double kappa = tr >= 0.0 ? 0.5 * (tr + root) : 2.0 * dt / (tr - root);
    kappa += 0.0; // normalise -0.0

    std::array<double, 2> v{};
    if (F(0, 1) > 0.0) {
        v = {F(0, 1), 0.5 * (F(1, 1) - F(0, 0) + root)};
    } else if (F(1, 0) > 0.0) {
        v = {0.5 * (F(0, 0) - F(1, 1) + root), F(1, 0)};
    } else {
        throw DomainError("leading_eigenvalue: needs a positive off-diagonal");
    }
    if (!(v[0] > 0.0 && v[1] > 0.0))
        throw DomainError("leading_eigenvalue: eigenvector not positive");
    double norm = pi[0] * v[0] + pi[1] * v[1];
    return {kappa, {v[0] / norm, v[1] / norm}, pi};
}

PerronData stable_perron(const StableParams& p, double z)
{
    auto pi = stationary_distribution(stable_F(p, 0.0));
    return leading_eigenvalue(stable_F(p, z), pi);
}

Complex sym_char_exponent(double alpha, double theta)
{
    if (!(alpha > 1.0 && alpha < 2.0))
        throw DomainError("sym_char_exponent: alpha must lie in (1,2)");
    require_finite(theta, "sym_char_exponent");
    if (theta == 0.0)
        return 0.0; // 1/Gamma(0) = 0 kills the whole expression
    Complex it2(0.0, 0.5 * theta); // i theta / 2
    return std::exp(alpha * std::log(2.0) +
                    log_gamma(0.5 * alpha - it2) + log_gamma(0.5 + it2) -
                    log_gamma(-it2) - log_gamma(0.5 * (1.0 - alpha) + it2));
}

Complex sym_laplace_exponent(double alpha, Complex z)
{
    if (!(alpha > 1.0 && alpha < 2.0))
        throw DomainError("sym_laplace_exponent: alpha must lie in (1,2)");
    if (!(z.real() > -1.0 && z.real() < 1.0 / alpha))
        throw StripError("sym_laplace_exponent: Re z outside (-1, 1/alpha)");
    Complex az2 = 0.5 * alpha * z;
    Complex a1z2 = 0.5 * alpha * (1.0 + z);
    // Zeros of psi sit on denominator gamma poles; return them exactly.
    if (is_gamma_pole(az2) || is_gamma_pole(0.5 - a1z2))
        return 0.0;
    if (z.imag() == 0.0) {
        SignedLog n1 = log_abs_gamma(0.5 - az2.real());
        SignedLog n2 = log_abs_gamma(a1z2.real());
        SignedLog d1 = log_abs_gamma(0.5 - a1z2.real());
        SignedLog d2 = log_abs_gamma(az2.real());
        double sign = n1.sign * n2.sign * d1.sign * d2.sign;
        return -sign * std::exp(alpha * std::log(2.0) + n1.log + n2.log -
                                d1.log - d2.log);
    }
    return -std::exp(alpha * std::log(2.0) + log_gamma(0.5 - az2) +
                     log_gamma(a1z2) - log_gamma(0.5 - a1z2) -
                     log_gamma(az2));
}

double sym_cpp_rate_constant(double alpha)
{
    return std::exp(log_gamma(alpha + 1.0)) * sin_pi(0.5 * alpha) / kPi;
}

double sym_cpp_density(double alpha, double y)
{
    if (!(alpha > 1.0 && alpha < 2.0))
        throw DomainError("sym_cpp_density: alpha must lie in (1,2)");
    require_finite(y, "sym_cpp_density");
    double k = sym_cpp_rate_constant(alpha);
    // k e^y (1+e^y)^{-(alpha+1)}, written to survive |y| >> 1
    if (y > 0.0)
        return k * std::exp(-alpha * y -
                            (alpha + 1.0) * std::log1p(std::exp(-y)));
    return k * std::exp(y - (alpha + 1.0) * std::log1p(std::exp(y)));
}

} // namespace stablehit
