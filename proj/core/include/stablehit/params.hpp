#ifndef STABLEHIT_PARAMS_HPP
#define STABLEHIT_PARAMS_HPP

// Validation and classification of the stable-process parameter pair
// (alpha, rho), together with the derived parameterisation constants.
// Admissible: alpha in (1,2), rho in (1 - 1/alpha, 1/alpha), i.e. strictly
// two-sided jumps.

#include <cstdint>
#include <optional>

namespace stablehit {

// Which side of zero the process starts on.  Plus is chain state 1
// (X_0 > 0), Minus is chain state 2 (X_0 < 0).
enum class StartSign : int { Plus = +1, Minus = -1 };

constexpr int state_index(StartSign s) { return s == StartSign::Plus ? 0 : 1; }
constexpr StartSign opposite(StartSign s)
{
    return s == StartSign::Plus ? StartSign::Minus : StartSign::Plus;
}

// A declared exact value alpha = num/den.
struct Fraction {
    std::int64_t num;
    std::int64_t den;
};

enum class AlphaKind { Rational, Irrational, NearRational };

// Rationality classification of alpha.  Rational only ever arises from a
// caller-declared fraction; a bare float within delta_res of a
// small-denominator convergent is flagged NearRational instead, since the
// series dispatch must not guess on an undecidable boundary.
struct AlphaClass {
    AlphaKind kind = AlphaKind::Irrational;
    std::int64_t m = 0; // coprime, m/n in (1,2), valid unless Irrational
    std::int64_t n = 0;
    double distance = 0.0; // |alpha - m/n| for NearRational
};

// NearRational detection thresholds: in double precision the sine
// denominators of the density series degrade once alpha is within about
// 1e-9 * k of a fraction with denominator <= 64; with series lengths up to
// a few hundred terms the safe classification margin is 1e-7.
inline constexpr double kNearRationalDelta = 1e-7;
inline constexpr std::int64_t kNearRationalMaxDen = 64;

AlphaClass classify_alpha(double alpha,
                          std::optional<Fraction> declared = std::nullopt);

struct StableParams {
    double alpha;
    double rho;
    double rho_hat; // 1 - rho
    AlphaClass alpha_class;

    bool symmetric() const { return rho == rho_hat; }

    // Levy measure constants of the (alpha, rho) normalisation.
    double c_plus() const;  // Gamma(alpha+1) sin(pi alpha rho) / pi
    double c_minus() const; // Gamma(alpha+1) sin(pi alpha rho_hat) / pi
    double beta() const;    // (c+ - c-) / (c+ + c-)
    double scale_c() const; // cos(pi alpha (rho - 1/2))

    // Parameters with rho and rho_hat exchanged (the dual process).
    StableParams dual() const;
};

// Validate (alpha, rho); throws DomainError naming the violated inequality.
StableParams make_params(double alpha, double rho);

// Same, with alpha declared as an exact fraction m/n.
StableParams make_params(Fraction alpha, double rho);

} // namespace stablehit

#endif
