#include "diskcp/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "diskcp/errors.hpp"
#include "diskcp/normal_forms.hpp"

namespace diskcp {

namespace {

const Complex kI{0.0, 1.0};

void require_in_disk(Complex x, const char* op) {
    if (!(std::abs(x) <= 1.0 + kDiskSlack)) {
        std::ostringstream os;
        os << op << ": |x| = " << std::abs(x) << " outside the closed unit disk";
        throw DomainError(os.str());
    }
}

bool fixes_plus_minus_one(const DiskAutomorphism& phi) {
    const double theta = phi.theta();
    return (theta < 1e-12 || theta > 1.0 - 1e-12) && std::abs(phi.z0().imag()) < 1e-12 &&
           phi.z0().real() != 0.0;
}

bool parabolic_at_one(const DiskAutomorphism& phi) {
    if (classify(phi).tag != ClassTag::Parabolic) return false;
    return std::abs(fixed_points(phi).points[0] - 1.0) < 1e-9;
}

Complex circumcenter(Complex a, Complex b, Complex c) {
    const Complex ab = b - a;
    const Complex ac = c - a;
    const double d = 2.0 * (ab.real() * ac.imag() - ab.imag() * ac.real());
    const double nab = std::norm(ab);
    const double nac = std::norm(ac);
    const Complex rel{(ac.imag() * nab - ab.imag() * nac) / d, (ab.real() * nac - ac.real() * nab) / d};
    return a + rel;
}

/// Length of the arc of a circle of radius R cut out by a chord of length d.
double arc_length(double chord, const InvariantCircle& circle) {
    if (circle.is_line) return chord;
    return 2.0 * circle.radius * std::asin(std::min(1.0, chord / (2.0 * circle.radius)));
}

/// Point at signed arc length s from i*crossing, moving towards +1.
Complex point_at_arc(double s, const InvariantCircle& circle) {
    if (circle.is_line) return {s, 0.0};
    const double beta = s / circle.radius;
    const double sgn = circle.crossing >= 0.0 ? 1.0 : -1.0;
    return Complex{0.0, circle.crossing} +
           2.0 * circle.radius * std::sin(0.5 * beta) * std::polar(1.0, -sgn * 0.5 * beta);
}

}  // namespace

std::string to_string(LimitKind kind) {
    switch (kind) {
        case LimitKind::FixedPair: return "fixed_pair";
        case LimitKind::FixedPoint: return "fixed_point";
        case LimitKind::Circle: return "circle";
        case LimitKind::Cycle: return "cycle";
        case LimitKind::Singleton: return "singleton";
    }
    return "unknown";
}

std::vector<Complex> orbit(const DiskAutomorphism& phi, Complex x, std::int64_t n_lo,
                           std::int64_t n_hi) {
    require_in_disk(x, "orbit");
    if (n_hi < n_lo) return {};
    const std::int64_t lo = std::min<std::int64_t>(n_lo, 0);
    const std::int64_t hi = std::max<std::int64_t>(n_hi, 0);
    std::vector<Complex> all(static_cast<std::size_t>(hi - lo + 1));
    const auto at = [&](std::int64_t n) -> Complex& { return all[static_cast<std::size_t>(n - lo)]; };
    at(0) = x;
    for (std::int64_t n = 1; n <= hi; ++n) at(n) = phi.apply(at(n - 1));
    const DiskAutomorphism inv = phi.inverse();
    for (std::int64_t n = -1; n >= lo; --n) at(n) = inv.apply(at(n + 1));
    return {all.begin() + (n_lo - lo), all.begin() + (n_hi - lo) + 1};
}

std::optional<RationalAngle> detect_rational(double x, std::int64_t max_denominator, double tol) {
    // Continued-fraction convergents h/k of x.
    double rest = x;
    std::int64_t h_prev = 1, h = static_cast<std::int64_t>(std::floor(rest));
    std::int64_t k_prev = 0, k = 1;
    for (int iter = 0; iter < 64; ++iter) {
        if (k > max_denominator) break;
        if (std::abs(x - static_cast<double>(h) / static_cast<double>(k)) <= tol) {
            std::int64_t p = h % k;
            if (p < 0) p += k;
            if (p == 0) return RationalAngle{0, 1};
            return RationalAngle{p, k};
        }
        const double frac = rest - std::floor(rest);
        if (frac < 1e-300) break;
        rest = 1.0 / frac;
        const auto a = static_cast<std::int64_t>(std::floor(rest));
        const std::int64_t h_next = a * h + h_prev;
        const std::int64_t k_next = a * k + k_prev;
        h_prev = h;
        h = h_next;
        k_prev = k;
        k = k_next;
    }
    return std::nullopt;
}

double OrbitClosureDescr::distance_to(Complex z) const {
    double best = std::numeric_limits<double>::infinity();
    for (const Complex& p : sample_orbit) best = std::min(best, std::abs(z - p));
    for (const Complex& p : limit_points) best = std::min(best, std::abs(z - p));
    if (kind == LimitKind::Circle) {
        best = std::min(best, std::abs(std::abs(z - circle_center) - circle_radius));
    }
    return best;
}

OrbitClosureDescr orbit_closure(const DiskAutomorphism& phi, Complex x,
                                const OrbitClosureOptions& options) {
    require_in_disk(x, "orbit_closure");
    OrbitClosureDescr out;
    out.cls = classify(phi);
    const std::int64_t K = options.sample_half_width;
    out.sample_orbit = orbit(phi, x, -K, K);

    if (out.cls.tag == ClassTag::Identity || std::abs(phi.apply(x) - x) <= 1e-12) {
        out.kind = LimitKind::Singleton;
        out.limit_points = {x};
        return out;
    }
    switch (out.cls.tag) {
        case ClassTag::Hyperbolic: {
            out.kind = LimitKind::FixedPair;
            out.limit_points = fixed_points(phi).points;
            return out;
        }
        case ClassTag::Parabolic: {
            out.kind = LimitKind::FixedPoint;
            out.limit_points = fixed_points(phi).points;
            return out;
        }
        default: break;
    }

    // Elliptic.
    std::optional<RationalAngle> rational;
    if (phi.rational_theta() && phi.z0() == Complex{}) {
        rational = phi.rational_theta();
    } else {
        const double rho = rotation_number(phi);
        rational = detect_rational(rho, options.max_denominator, options.rational_tolerance);
    }
    if (options.force_rational.has_value()) {
        if (!*options.force_rational) {
            rational.reset();
        } else if (!rational) {
            rational = detect_rational(rotation_number(phi), options.max_denominator, 1e-6);
            if (!rational) throw NumericalError("orbit_closure: no rational rotation number found");
        }
    }
    if (rational) {
        out.kind = LimitKind::Cycle;
        out.rotation = *rational;
        out.limit_points = orbit(phi, x, 0, rational->q - 1);
        return out;
    }

    const Complex c = fixed_points(phi).points[0];
    const DiskAutomorphism to_center(0.0, c);
    const DiskAutomorphism from_center = to_center.inverse();
    const double rho = std::abs(to_center.apply(x));
    const Complex p0 = from_center.apply(std::polar(rho, 0.0));
    const Complex p1 = from_center.apply(std::polar(rho, 2.0 * kPi / 3.0));
    const Complex p2 = from_center.apply(std::polar(rho, 4.0 * kPi / 3.0));
    out.kind = LimitKind::Circle;
    out.circle_center = circumcenter(p0, p1, p2);
    out.circle_radius = std::abs(p0 - out.circle_center);
    return out;
}

Complex halfplane_coordinate(const DiskAutomorphism& phi, Complex z) {
    if (fixes_plus_minus_one(phi) && classify(phi).tag == ClassTag::Hyperbolic) {
        if (std::abs(z - 1.0) < 1e-15 || std::abs(z + 1.0) < 1e-15) {
            throw DomainError("halfplane_coordinate: z is a fixed point");
        }
        return (1.0 + z) / (1.0 - z);
    }
    if (parabolic_at_one(phi)) {
        if (std::abs(z - 1.0) < 1e-15) throw DomainError("halfplane_coordinate: z is the fixed point");
        return kI * (1.0 + z) / (1.0 - z);
    }
    throw ClassError("halfplane_coordinate needs a hyperbolic map fixing -1, 1 or a parabolic map fixing 1");
}

Complex halfplane_coordinate_inverse(const DiskAutomorphism& phi, Complex c) {
    if (fixes_plus_minus_one(phi) && classify(phi).tag == ClassTag::Hyperbolic) {
        if (!std::isfinite(std::abs(c))) return {1.0, 0.0};
        return (c - 1.0) / (c + 1.0);
    }
    if (parabolic_at_one(phi)) {
        if (!std::isfinite(std::abs(c))) return {1.0, 0.0};
        return (c - kI) / (c + kI);
    }
    throw ClassError("halfplane_coordinate_inverse: unsupported map");
}

double hyperbolic_factor(const DiskAutomorphism& phi) {
    if (!fixes_plus_minus_one(phi) || classify(phi).tag != ClassTag::Hyperbolic) {
        throw ClassError("hyperbolic_factor needs a hyperbolic map fixing -1 and 1");
    }
    const double x0 = phi.z0().real();
    return (1.0 - x0) / (1.0 + x0);
}

double parabolic_translation(const DiskAutomorphism& phi) {
    if (!parabolic_at_one(phi)) throw ClassError("parabolic_translation needs a parabolic map fixing 1");
    const Complex origin{};
    return (halfplane_coordinate(phi, phi.apply(origin)) - halfplane_coordinate(phi, origin)).real();
}

namespace {

double attracting_factor(const DiskAutomorphism& phi) {
    const double m = hyperbolic_factor(phi);
    if (!(m > 1.0)) throw ClassError("expected a hyperbolic normal form with 1 attractive");
    return m;
}

double coordinate_modulus(Complex z) {
    if (std::abs(z - 1.0) < 1e-15 || std::abs(z + 1.0) < 1e-15) {
        throw DomainError("fundamental domain is undefined at -1 and 1");
    }
    return std::abs(1.0 + z) / std::abs(1.0 - z);
}

}  // namespace

bool fundamental_domain_contains(const DiskAutomorphism& phi, Complex z) {
    const double m = attracting_factor(phi);
    const double r = coordinate_modulus(z);
    return r >= 1.0 && r < m;
}

bool printed_domain_contains(const DiskAutomorphism& phi, Complex z) {
    attracting_factor(phi);
    const double a = -phi.z0().real();
    return z.real() >= 0.0 && std::abs(1.0 - z) >= 1.0 - a;
}

CanonicalOrbitPoint canonical_point(const DiskAutomorphism& phi, Complex z) {
    const double m = attracting_factor(phi);
    const double r = coordinate_modulus(z);
    const Complex c = (1.0 + z) / (1.0 - z);
    auto n = static_cast<std::int64_t>(std::floor(std::log(r) / std::log(m)));
    const auto rep_of = [&](std::int64_t k) {
        const Complex w = c / std::pow(m, static_cast<double>(k));
        return (w - 1.0) / (w + 1.0);
    };
    Complex rep = rep_of(n);
    for (int attempt = 0; attempt < 4; ++attempt) {
        const double rr = coordinate_modulus(rep);
        if (rr < 1.0) {
            --n;
        } else if (rr >= m) {
            ++n;
        } else {
            break;
        }
        rep = rep_of(n);
    }
    if (!fundamental_domain_contains(phi, rep)) {
        throw NumericalError("canonical_point: representative left the fundamental domain");
    }
    return {rep, n};
}

InvariantCircle invariant_circle(Complex z) {
    InvariantCircle out;
    if (z.imag() == 0.0) {
        out.is_line = true;
        out.radius = std::numeric_limits<double>::infinity();
        return out;
    }
    out.k = (std::norm(z) - 1.0) / (2.0 * z.imag());
    out.radius = std::hypot(1.0, out.k);
    out.crossing = z.imag() > 0.0 ? 1.0 / (out.radius - out.k) : -1.0 / (out.radius + out.k);
    return out;
}

HyperbolicConjugacy::HyperbolicConjugacy(const DiskAutomorphism& phi, const DiskAutomorphism& psi)
    : HyperbolicConjugacy(phi, psi, true) {}

HyperbolicConjugacy::HyperbolicConjugacy(const DiskAutomorphism& phi, const DiskAutomorphism& psi,
                                         bool check)
    : phi_(phi), psi_(psi), m_phi_(attracting_factor(phi)), m_psi_(attracting_factor(psi)) {
    if (check) {
        std::vector<Complex> probe = disk_samples(64, 0);
        const double residual = equivariance_residual(probe);
        if (!(residual <= 1e-6)) {
            std::ostringstream os;
            os << "hyperbolic_conjugacy: equivariance residual " << residual << " exceeds 1e-6";
            throw NumericalError(os.str());
        }
    }
}

Complex HyperbolicConjugacy::base_map(Complex z) const {
    const InvariantCircle circle = invariant_circle(z);
    const Complex start{0.0, circle.crossing};
    const double direction = coordinate_modulus(z) >= 1.0 ? 1.0 : -1.0;
    const double s_z = direction * arc_length(std::abs(z - start), circle);
    const double s_phi = arc_length(std::abs(phi_.apply(start) - start), circle);
    const double s_psi = arc_length(std::abs(psi_.apply(start) - start), circle);
    return point_at_arc(s_z / s_phi * s_psi, circle);
}

Complex HyperbolicConjugacy::operator()(Complex z) const {
    require_in_disk(z, "hyperbolic_conjugacy");
    if (std::abs(z - 1.0) < 1e-15 || std::abs(z + 1.0) < 1e-15) return z;
    const CanonicalOrbitPoint cp = canonical_point(phi_, z);
    const Complex w = base_map(cp.representative);
    const Complex c = (1.0 + w) / (1.0 - w) * std::pow(m_psi_, static_cast<double>(cp.index));
    if (!std::isfinite(std::abs(c))) return {1.0, 0.0};
    return (c - 1.0) / (c + 1.0);
}

HyperbolicConjugacy HyperbolicConjugacy::reversed() const { return {psi_, phi_, false}; }

double HyperbolicConjugacy::equivariance_residual(const std::vector<Complex>& samples) const {
    double worst = 0.0;
    for (const Complex& z : samples) {
        const double d = std::abs((*this)(phi_.apply(z)) - psi_.apply((*this)(z)));
        if (!(d <= worst)) worst = d;
    }
    return worst;
}

HyperbolicConjugacy hyperbolic_conjugacy(const DiskAutomorphism& phi, const DiskAutomorphism& psi) {
    return {phi, psi};
}

}  // namespace diskcp
