#pragma once

// Conformal automorphisms of the closed unit disk,
//   phi(z) = exp(2 i pi theta) (z - z0) / (1 - conj(z0) z),   |z0| < 1,
// their group structure (as unevaluated words), fixed points and the
// hyperbolic / parabolic / elliptic trichotomy.

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace diskcp {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

/// Slack allowed on |z| <= 1 when evaluating.
inline constexpr double kDiskSlack = 1e-9;

/// theta = p / q exactly, 0 <= p < q, gcd(p, q) = 1.
struct RationalAngle {
    std::int64_t p = 0;
    std::int64_t q = 1;

    double value() const { return static_cast<double>(p) / static_cast<double>(q); }
    /// exp(2 i pi k p / q), reduced modulo q before the trigonometric call so
    /// that powers of omega are periodic to the last bit.
    Complex root_power(std::int64_t k) const;

    friend bool operator==(const RationalAngle&, const RationalAngle&) = default;
};

class DiskAutomorphism {
public:
    /// Identity.
    DiskAutomorphism() = default;
    /// theta is reduced modulo 1; throws DomainError if |z0| >= 1 or an input is not finite.
    DiskAutomorphism(double theta, Complex z0);

    static DiskAutomorphism rational(std::int64_t p, std::int64_t q, Complex z0 = {});
    static DiskAutomorphism rotation(double theta) { return {theta, Complex{}}; }
    /// z -> (z + a) / (1 + a z), i.e. theta = 0, z0 = -a.
    static DiskAutomorphism hyperbolic_normal_form(double a);
    /// The parabolic map fixing 1 only with phi(-1) = i.
    static DiskAutomorphism parabolic_plus();
    /// Mirror image of parabolic_plus: fixes 1 only, phi(-1) = -i.
    static DiskAutomorphism parabolic_minus();

    double theta() const { return theta_; }
    Complex z0() const { return z0_; }
    /// exp(2 i pi theta).
    Complex lambda() const;
    const std::optional<RationalAngle>& rational_theta() const { return rational_; }

    /// Checked evaluation: DomainError when |z| > 1 + 1e-9.
    Complex evaluate(Complex z) const;
    /// Evaluation without the domain check (still guards the pole).
    Complex apply(Complex z) const;
    Complex operator()(Complex z) const { return evaluate(z); }
    /// phi'(z) = lambda (1 - |z0|^2) / (1 - conj(z0) z)^2.
    Complex derivative(Complex z) const;

    /// Exact inverse: (-theta, -lambda z0).
    DiskAutomorphism inverse() const;
    /// z -> conj(phi(conj(z))).
    DiskAutomorphism mirrored() const;

    bool is_identity_exact() const { return theta_ == 0.0 && z0_ == Complex{}; }

    friend bool operator==(const DiskAutomorphism& a, const DiskAutomorphism& b) {
        return a.theta_ == b.theta_ && a.z0_ == b.z0_;
    }

private:
    double theta_ = 0.0;
    Complex z0_{};
    std::optional<RationalAngle> rational_;
};

/// One factor map^exp of a word.
struct WordFactor {
    DiskAutomorphism map;
    std::int64_t exp = 1;
};

/// An unevaluated product f1^e1 o f2^e2 o ... o fk^ek (rightmost factor is
/// applied first). The empty word is the identity.
class MoebiusWord {
public:
    MoebiusWord() = default;
    explicit MoebiusWord(DiskAutomorphism map, std::int64_t exp = 1);
    explicit MoebiusWord(std::vector<WordFactor> factors);

    static MoebiusWord identity() { return {}; }

    const std::vector<WordFactor>& factors() const { return factors_; }
    bool empty() const { return factors_.empty(); }

    /// Checked at the word's input; intermediate values are not re-checked.
    Complex evaluate(Complex z) const;
    Complex apply(Complex z) const;
    Complex operator()(Complex z) const { return evaluate(z); }

private:
    std::vector<WordFactor> factors_;
};

/// Evaluates `map^exp` at z by iteration (negative exp iterates the inverse).
Complex apply_power(const DiskAutomorphism& map, std::int64_t exp, Complex z);

Complex evaluate(const DiskAutomorphism& phi, Complex z);
Complex evaluate(const MoebiusWord& w, Complex z);

/// f o g. Adjacent factors with identical maps are merged by adding exponents.
MoebiusWord compose(const MoebiusWord& f, const MoebiusWord& g);
MoebiusWord invert(const MoebiusWord& f);
MoebiusWord power(const MoebiusWord& f, std::int64_t n);

/// Reads off (theta, z0) of the automorphism a word represents: z0 = w^-1(0)
/// and lambda from w(1). NumericalError if the refolded map disagrees with the
/// word by more than 1e-10 on 32 samples.
DiskAutomorphism normalize(const MoebiusWord& w);

enum class ClassTag { Identity, Hyperbolic, Parabolic, Elliptic };

std::string to_string(ClassTag tag);

struct AutomorphismClass {
    ClassTag tag = ClassTag::Identity;
    /// |z0| - |sin(pi theta)|: > 0 hyperbolic, < 0 elliptic, 0 parabolic.
    double margin = 0.0;
};

AutomorphismClass classify(const DiskAutomorphism& phi, double tol = 1e-12);

struct FixedPointData {
    /// Hyperbolic: repulsive point first, attractive second.
    std::vector<Complex> points;
    std::vector<double> multipliers;
    /// 4 lambda (|z0|^2 - sin^2(pi theta)).
    Complex discriminant;
};

/// Fixed points in the closed disk of a non-identity automorphism, from the
/// trinomial conj(z0) z^2 + (lambda - 1) z - lambda z0. ClassError on identity.
FixedPointData fixed_points(const DiskAutomorphism& phi, double tol = 1e-12);

/// ClassError unless hyperbolic or parabolic.
Complex attractive_fixed_point(const DiskAutomorphism& phi, double tol = 1e-12);
Complex repulsive_fixed_point(const DiskAutomorphism& phi, double tol = 1e-12);

/// Deterministic sample set: `n_interior` Halton points (bases 2, 3) mapped
/// into the open disk of radius 0.98, followed by `n_boundary` roots of unity.
std::vector<Complex> disk_samples(int n_interior, int n_boundary);

/// Max |f(z) - g(z)| over `points`.
template <class F, class G>
double sup_distance(const F& f, const G& g, const std::vector<Complex>& points) {
    double worst = 0.0;
    for (const Complex& z : points) {
        const double d = std::abs(f(z) - g(z));
        if (!(d <= worst)) worst = d;
    }
    return worst;
}

}  // namespace diskcp
