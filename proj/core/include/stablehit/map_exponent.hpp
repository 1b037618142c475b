#ifndef STABLEHIT_MAP_EXPONENT_HPP
#define STABLEHIT_MAP_EXPONENT_HPP

// The Markov-additive layer behind the hitting-time law: the generic
// two-state matrix exponent F(z) = diag(psi) + Q o G(z), its explicit
// stable form, the functional-equation matrices B(s) = -F(-s)/s and
// A(s) = B(s)^{-1} in closed form, the Perron eigenvalue/eigenvector, and
// the Levy exponents of the symmetric (scalar) case.
//
// Only unkilled MAPs are supported; the stable application never needs a
// killing rate.

#include <array>
#include <complex>
#include <functional>

#include "stablehit/params.hpp"

namespace stablehit {

using Complex = std::complex<double>;

// 2x2 complex matrix value together with the argument it was evaluated at.
struct Matrix2c {
    std::array<std::array<Complex, 2>, 2> a{};
    Complex argument{};

    Complex& operator()(int i, int j) { return a[i][j]; }
    const Complex& operator()(int i, int j) const { return a[i][j]; }
    Complex det() const { return a[0][0] * a[1][1] - a[0][1] * a[1][0]; }
    Complex row_sum(int i) const { return a[i][0] + a[i][1]; }
};

// Real specialisation for real arguments (Perron theory needs real entries).
struct Matrix2 {
    std::array<std::array<double, 2>, 2> a{};
    double argument = 0.0;

    double& operator()(int i, int j) { return a[i][j]; }
    const double& operator()(int i, int j) const { return a[i][j]; }
    double det() const { return a[0][0] * a[1][1] - a[0][1] * a[1][0]; }
    double trace() const { return a[0][0] + a[1][1]; }
    double row_sum(int i) const { return a[i][0] + a[i][1]; }
};

// Leading (Perron) eigenvalue data of F at a real argument: kappa real and
// simple, v componentwise positive and normalised against the stationary
// distribution pi of the modulating chain, pi . v = 1.
struct PerronData {
    double kappa;
    std::array<double, 2> v;
    std::array<double, 2> pi;
};

using ExponentFn = std::function<Complex(Complex)>;

// Generic matrix exponent diag(psi_1(z), psi_2(z)) + Q o G(z) (elementwise
// product).  Q must have nonnegative off-diagonals and zero row sums
// (unkilled chain); G entries may be null, meaning identically 1.
Matrix2c build_map_exponent(const std::array<ExponentFn, 2>& psi,
                            const Matrix2& Q,
                            const std::array<std::array<ExponentFn, 2>, 2>& G,
                            Complex z);

// Matrix exponent of (-alpha*xi, J) for the stable process, on the strip
// -1 < Re z < 1/alpha.  Row sums vanish identically at z = 0.
Matrix2c stable_F(const StableParams& p, Complex z);
Matrix2 stable_F(const StableParams& p, double z);

// B(s) = -F(-s)/s through its sine/gamma closed form,
// Re s in (-1/alpha, 1), s != 0.
Matrix2c matrix_B(const StableParams& p, Complex s);
Matrix2 matrix_B(const StableParams& p, double s);

// A(s) = B(s)^{-1} through its own closed form (never numerical inversion),
// Re s in (1 - 2/alpha, 1 - 1/alpha).
Matrix2c matrix_A(const StableParams& p, Complex s);
Matrix2 matrix_A(const StableParams& p, double s);

// Both functional-equation matrices at once (strips of both apply).
std::pair<Matrix2c, Matrix2c> B_and_A(const StableParams& p, Complex s);

// det B(s) in closed form, for cross-checking the entrywise determinant.
Complex det_B_closed_form(const StableParams& p, Complex s);

// Stationary distribution of the chain with generator Q.
std::array<double, 2> stationary_distribution(const Matrix2& Q);

// Perron eigenvalue and normalised eigenvector of F (real entries); pi is
// the stationary distribution used in the normalisation.
PerronData leading_eigenvalue(const Matrix2& F, const std::array<double, 2>& pi);

// Convenience: Perron data of stable_F at real z, with pi taken from the
// generator stable_F(0).
PerronData stable_perron(const StableParams& p, double z);

// Characteristic exponent of the Lamperti transform xi of the radial part
// of the symmetric process.  The removable singularity at theta = 0 is an
// explicit case.
Complex sym_char_exponent(double alpha, double theta);

// Laplace exponent psi of -alpha*xi (symmetric case), Re z in (-1, 1/alpha).
// psi(0) = 0 and the Cramer root psi(1/alpha - 1) = 0 fall on zeros of the
// reciprocal gamma factors and are handled exactly.
Complex sym_laplace_exponent(double alpha, Complex z);

// Levy density pi^C of the compound Poisson part of xi (symmetric case):
// k e^y / (1+e^y)^(alpha+1), total mass k/alpha.
double sym_cpp_density(double alpha, double y);

// The jump-rate constant k = Gamma(alpha+1) sin(pi alpha/2) / pi.
double sym_cpp_rate_constant(double alpha);

} // namespace stablehit

#endif
