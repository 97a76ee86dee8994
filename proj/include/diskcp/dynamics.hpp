#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "diskcp/moebius.hpp"

namespace diskcp {

/// [phi^n(x) for n in [n_lo, n_hi]], by iterating phi and phi^-1 from x.
std::vector<Complex> orbit(const DiskAutomorphism& phi, Complex x, std::int64_t n_lo,
                           std::int64_t n_hi);

enum class LimitKind { FixedPair, FixedPoint, Circle, Cycle, Singleton };

std::string to_string(LimitKind kind);

/// Orbit closure = closure of the sampled orbit plus `limit_points` (pair /
/// fixed point / cycle / singleton) or the circle (center, radius).
struct OrbitClosureDescr {
    AutomorphismClass cls;
    LimitKind kind = LimitKind::Singleton;
    /// phi^k(x) for k = -K..K.
    std::vector<Complex> sample_orbit;
    std::vector<Complex> limit_points;
    Complex circle_center{};
    double circle_radius = 0.0;
    /// Rational rotation number p/q detected for elliptic maps (q == 0 if none).
    RationalAngle rotation{0, 0};

    /// Euclidean distance from z to the closure this describes.
    double distance_to(Complex z) const;
};

struct OrbitClosureOptions {
    std::int64_t sample_half_width = 50;
    /// Forces the elliptic rational/irrational decision.
    std::optional<bool> force_rational;
    std::int64_t max_denominator = 1000000;
    double rational_tolerance = 1e-12;
};

OrbitClosureDescr orbit_closure(const DiskAutomorphism& phi, Complex x,
                                const OrbitClosureOptions& options = {});

/// Best rational approximation p/q (q <= max_denominator) of x in [0,1) among
/// the continued-fraction convergents, if one lies within `tol`.
std::optional<RationalAngle> detect_rational(double x, std::int64_t max_denominator, double tol);

/// Linearizing coordinate of a hyperbolic map fixing +-1 (c(z) = (1+z)/(1-z),
/// c o phi = m c) or of a parabolic map fixing 1 (c(z) = i(1+z)/(1-z),
/// c o phi = c + beta). DomainError at the fixed points.
Complex halfplane_coordinate(const DiskAutomorphism& phi, Complex z);
Complex halfplane_coordinate_inverse(const DiskAutomorphism& phi, Complex c);

/// Factor m = (1 + a)/(1 - a) of a hyperbolic map fixing +-1 (<1 when -1 is
/// attractive); ClassError otherwise.
double hyperbolic_factor(const DiskAutomorphism& phi);
/// Translation beta of a parabolic map fixing 1; ClassError otherwise.
double parabolic_translation(const DiskAutomorphism& phi);

struct CanonicalOrbitPoint {
    Complex representative;
    std::int64_t index = 0;
};

/// The half-open region {1 <= |c(z)| < m} between the imaginary diameter L
/// (included) and phi(L) (excluded), for phi = (z + a)/(1 + a z).
bool fundamental_domain_contains(const DiskAutomorphism& phi, Complex z);
/// The region as printed in closed form: Re z >= 0 and |1 - z| >= 1 - a.
/// Exposed for comparison only; it does not meet every orbit exactly once.
bool printed_domain_contains(const DiskAutomorphism& phi, Complex z);
/// phi^index(representative) == z with representative in the domain.
CanonicalOrbitPoint canonical_point(const DiskAutomorphism& phi, Complex z);

/// Topological conjugacy between two hyperbolic normal forms built from
/// proportional arc length along the circles through -1 and 1, extended by
/// mu o phi = psi o mu. Immutable; safe to evaluate concurrently.
class HyperbolicConjugacy {
public:
    /// NumericalError if the equivariance residual exceeds 1e-6 on a probe set.
    HyperbolicConjugacy(const DiskAutomorphism& phi, const DiskAutomorphism& psi);

    Complex operator()(Complex z) const;
    /// The map obtained by swapping phi and psi.
    HyperbolicConjugacy reversed() const;

    /// Restriction to the fundamental region of phi (no index shift).
    Complex base_map(Complex z) const;

    const DiskAutomorphism& source() const { return phi_; }
    const DiskAutomorphism& target() const { return psi_; }

    /// Max over samples of |mu(phi(z)) - psi(mu(z))|.
    double equivariance_residual(const std::vector<Complex>& samples) const;

private:
    HyperbolicConjugacy(const DiskAutomorphism& phi, const DiskAutomorphism& psi, bool check);

    DiskAutomorphism phi_;
    DiskAutomorphism psi_;
    double m_phi_;
    double m_psi_;
};

HyperbolicConjugacy hyperbolic_conjugacy(const DiskAutomorphism& phi, const DiskAutomorphism& psi);

/// Invariant circle of a hyperbolic normal form through -1, 1 and z: center
/// i k and radius R; `is_line` for the real diameter. `crossing` is the point
/// i y where the circle meets the imaginary diameter.
struct InvariantCircle {
    bool is_line = false;
    double k = 0.0;
    double radius = 0.0;
    double crossing = 0.0;
};

InvariantCircle invariant_circle(Complex z);

}  // namespace diskcp
