#include "diskcp/normal_forms.hpp"

#include <cmath>
#include <sstream>

#include "diskcp/errors.hpp"

namespace diskcp {

namespace {

const Complex kI{0.0, 1.0};

void require(const DiskAutomorphism& phi, ClassTag wanted, const char* op) {
    const AutomorphismClass cls = classify(phi);
    if (cls.tag != wanted) {
        std::ostringstream os;
        os << op << " needs a " << to_string(wanted) << " automorphism, got "
           << to_string(cls.tag) << " (margin " << cls.margin << ")";
        throw ClassError(os.str());
    }
}

void check_residual(double residual, const char* op) {
    if (!(residual <= kNormalFormTolerance)) {
        std::ostringstream os;
        os << op << ": conjugation residual " << residual << " exceeds " << kNormalFormTolerance;
        throw NumericalError(os.str());
    }
}

DiskAutomorphism conjugate(const MoebiusWord& w, const DiskAutomorphism& phi) {
    return normalize(compose(compose(w, MoebiusWord(phi)), invert(w)));
}

double rotation_theta(Complex unit) {
    double t = std::arg(unit) / (2.0 * kPi);
    if (t < 0.0) t += 1.0;
    if (t >= 1.0) t = 0.0;
    return t;
}

bool near(Complex a, Complex b, double tol = 1e-12) { return std::abs(a - b) < tol; }

}  // namespace

double conjugation_residual(const MoebiusWord& conjugator, const DiskAutomorphism& phi,
                            const DiskAutomorphism& canonical) {
    static const std::vector<Complex> samples = disk_samples(48, 16);
    const MoebiusWord conj = compose(compose(conjugator, MoebiusWord(phi)), invert(conjugator));
    return sup_distance([&](Complex z) { return conj.apply(z); },
                        [&](Complex z) { return canonical.apply(z); }, samples);
}

NormalFormResult hyperbolic_normal_form(const DiskAutomorphism& phi) {
    require(phi, ClassTag::Hyperbolic, "hyperbolic_normal_form");
    const FixedPointData fp = fixed_points(phi);
    const Complex alpha = fp.points[0];
    const Complex beta = fp.points[1];

    MoebiusWord psi;
    const bool already_real = (near(alpha, -1.0) && near(beta, 1.0)) ||
                              (near(alpha, 1.0) && near(beta, -1.0));
    if (!already_real) {
        // omega^2 = conj(alpha beta); gamma must land in (-1, 1).
        Complex omega = std::sqrt(std::conj(alpha * beta));
        const auto gamma_of = [&](Complex w) { return (kI - w * alpha) / (1.0 - kI * w * alpha); };
        Complex gamma = gamma_of(omega);
        const auto bad = [](Complex g) {
            return !std::isfinite(g.real()) || !std::isfinite(g.imag()) ||
                   std::abs(g.imag()) > 1e-9 || std::abs(g.real()) >= 1.0 + 1e-9;
        };
        if (bad(gamma)) {
            omega = -omega;
            gamma = gamma_of(omega);
        }
        if (bad(gamma)) throw NumericalError("hyperbolic_normal_form: no branch puts gamma in (-1, 1)");
        const double g = gamma.real();
        // psi(z) = i omega (z + gamma conj(omega)) / (1 + gamma omega z).
        psi = MoebiusWord(DiskAutomorphism(rotation_theta(kI * omega), -g * std::conj(omega)));
    }

    // Make 1 the attractive point.
    if (std::real(psi.apply(beta)) < 0.0) {
        psi = compose(MoebiusWord(DiskAutomorphism::rotation(0.5)), psi);
    }

    const DiskAutomorphism folded = conjugate(psi, phi);
    const double a = -folded.z0().real();
    if (!(a > 0.0 && a < 1.0)) {
        std::ostringstream os;
        os << "hyperbolic_normal_form: recovered a = " << a << " outside (0, 1)";
        throw NumericalError(os.str());
    }

    NormalFormResult out;
    out.cls = classify(phi);
    out.canonical = DiskAutomorphism::hyperbolic_normal_form(a);
    out.conjugator = psi;
    out.invariant = HyperbolicInvariant{a};
    out.residual = conjugation_residual(psi, phi, out.canonical);
    check_residual(out.residual, "hyperbolic_normal_form");
    return out;
}

NormalFormResult elliptic_normal_form(const DiskAutomorphism& phi) {
    require(phi, ClassTag::Elliptic, "elliptic_normal_form");
    const Complex c = fixed_points(phi).points[0];

    MoebiusWord psi;
    if (std::abs(c) > 0.0) psi = MoebiusWord(DiskAutomorphism(0.0, c));

    const DiskAutomorphism folded = conjugate(psi, phi);
    const Complex mu = folded.lambda();

    NormalFormResult out;
    out.cls = classify(phi);
    if (phi.z0() == Complex{}) {
        out.canonical = phi;
    } else {
        out.canonical = DiskAutomorphism::rotation(rotation_theta(mu));
    }
    out.conjugator = psi;
    out.invariant = EllipticInvariant{out.canonical.lambda()};
    out.residual = conjugation_residual(psi, phi, out.canonical);
    check_residual(out.residual, "elliptic_normal_form");
    return out;
}

NormalFormResult parabolic_normal_form(const DiskAutomorphism& phi) {
    require(phi, ClassTag::Parabolic, "parabolic_normal_form");
    const Complex alpha = fixed_points(phi).points[0];

    // Rotate the fixed point to 1.
    MoebiusWord conjugator;
    if (!near(alpha, 1.0)) {
        conjugator = MoebiusWord(DiskAutomorphism::rotation(rotation_theta(std::conj(alpha))));
    }
    const Complex image = compose(compose(conjugator, MoebiusWord(phi)), invert(conjugator))
                              .apply(Complex{-1.0, 0.0});
    const int orientation = image.imag() >= 0.0 ? 1 : -1;
    const Complex target = orientation > 0 ? kI : -kI;

    // The automorphisms fixing -1 and 1 are z -> (z + t) / (1 + t z), t in (-1, 1);
    // the one sending `image` to `target` has t = (target - image) / (1 - target image).
    const Complex t = (target - image) / (1.0 - target * image);
    if (std::abs(t.imag()) > 1e-9 || !(std::abs(t.real()) < 1.0)) {
        throw NumericalError("parabolic_normal_form: boundary-fixing conjugator is not real");
    }
    if (std::abs(t.real()) > 0.0) {
        conjugator = compose(MoebiusWord(DiskAutomorphism(0.0, Complex{-t.real(), 0.0})), conjugator);
    }

    NormalFormResult out;
    out.cls = classify(phi);
    out.canonical = orientation > 0 ? DiskAutomorphism::parabolic_plus()
                                    : DiskAutomorphism::parabolic_minus();
    out.conjugator = conjugator;
    out.invariant = ParabolicInvariant{orientation};
    out.residual = conjugation_residual(conjugator, phi, out.canonical);
    check_residual(out.residual, "parabolic_normal_form");
    return out;
}

NormalFormResult normal_form(const DiskAutomorphism& phi) {
    switch (classify(phi).tag) {
        case ClassTag::Hyperbolic: return hyperbolic_normal_form(phi);
        case ClassTag::Elliptic: return elliptic_normal_form(phi);
        case ClassTag::Parabolic: return parabolic_normal_form(phi);
        case ClassTag::Identity: break;
    }
    NormalFormResult out;
    out.cls = classify(phi);
    out.canonical = DiskAutomorphism{};
    out.invariant = NoInvariant{};
    out.residual = conjugation_residual(out.conjugator, phi, out.canonical);
    return out;
}

double rotation_number(const DiskAutomorphism& phi) {
    const NormalFormResult nf = elliptic_normal_form(phi);
    return nf.canonical.theta();
}

bool are_topologically_conjugate(const DiskAutomorphism& phi, const DiskAutomorphism& psi) {
    const ClassTag a = classify(phi).tag;
    const ClassTag b = classify(psi).tag;
    if (a != b) return false;
    if (a != ClassTag::Elliptic) return true;
    const double r = rotation_number(phi);
    const double s = rotation_number(psi);
    const auto circ = [](double x, double y) {
        const double d = std::abs(x - y);
        return std::min(d, 1.0 - d);
    };
    return circ(r, s) <= 1e-9 || circ(r, 1.0 - s) <= 1e-9;
}

}  // namespace diskcp
