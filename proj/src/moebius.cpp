#include "diskcp/moebius.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

#include "diskcp/errors.hpp"

namespace diskcp {

namespace {

double reduce_unit(double theta) {
    double t = std::fmod(theta, 1.0);
    if (t < 0.0) t += 1.0;
    if (t >= 1.0) t = 0.0;
    return t;
}

std::int64_t mod(std::int64_t a, std::int64_t q) {
    const std::int64_t r = a % q;
    return r < 0 ? r + q : r;
}

double radical_inverse(int index, int base) {
    double result = 0.0;
    double f = 1.0 / base;
    while (index > 0) {
        result += f * (index % base);
        index /= base;
        f /= base;
    }
    return result;
}

}  // namespace

Complex RationalAngle::root_power(std::int64_t k) const {
    const std::int64_t r = mod(mod(k, q) * p, q);
    if (r == 0) return {1.0, 0.0};
    return std::polar(1.0, 2.0 * kPi * static_cast<double>(r) / static_cast<double>(q));
}

DiskAutomorphism::DiskAutomorphism(double theta, Complex z0) {
    if (!std::isfinite(theta) || !std::isfinite(z0.real()) || !std::isfinite(z0.imag())) {
        throw DomainError("automorphism parameters must be finite");
    }
    if (!(std::abs(z0) < 1.0)) {
        std::ostringstream os;
        os << "|z0| = " << std::abs(z0) << " must be < 1";
        throw DomainError(os.str());
    }
    theta_ = reduce_unit(theta);
    z0_ = z0;
}

DiskAutomorphism DiskAutomorphism::rational(std::int64_t p, std::int64_t q, Complex z0) {
    if (q <= 0) throw DomainError("rational angle needs q > 0");
    p = mod(p, q);
    const std::int64_t g = std::gcd(p, q);
    RationalAngle r{p / g, q / g};
    if (r.p == 0) r.q = 1;
    DiskAutomorphism out(r.value(), z0);
    out.rational_ = r;
    return out;
}

DiskAutomorphism DiskAutomorphism::hyperbolic_normal_form(double a) {
    if (!(a > 0.0 && a < 1.0)) throw DomainError("hyperbolic normal form needs a in (0, 1)");
    return {0.0, Complex{-a, 0.0}};
}

DiskAutomorphism DiskAutomorphism::parabolic_plus() {
    // lambda = (3i - 1) / (i - 3) and z0 = (1 - conj(lambda)) / 2 = (1 - i) / (3 + i).
    const Complex i{0.0, 1.0};
    const Complex lambda = (3.0 * i - 1.0) / (i - 3.0);
    const Complex z0 = (1.0 - i) / (3.0 + i);
    return {std::arg(lambda) / (2.0 * kPi), z0};
}

DiskAutomorphism DiskAutomorphism::parabolic_minus() { return parabolic_plus().mirrored(); }

Complex DiskAutomorphism::lambda() const {
    if (rational_) return rational_->root_power(1);
    if (theta_ == 0.0) return {1.0, 0.0};
    return std::polar(1.0, 2.0 * kPi * theta_);
}

Complex DiskAutomorphism::apply(Complex z) const {
    const Complex denom = 1.0 - std::conj(z0_) * z;
    if (std::abs(denom) < 1e-300) throw PoleError("evaluation at the pole of a disk automorphism");
    return lambda() * (z - z0_) / denom;
}

Complex DiskAutomorphism::evaluate(Complex z) const {
    if (!(std::abs(z) <= 1.0 + kDiskSlack)) {
        std::ostringstream os;
        os << "|z| = " << std::abs(z) << " outside the closed unit disk";
        throw DomainError(os.str());
    }
    return apply(z);
}

Complex DiskAutomorphism::derivative(Complex z) const {
    const Complex d = 1.0 - std::conj(z0_) * z;
    return lambda() * (1.0 - std::norm(z0_)) / (d * d);
}

DiskAutomorphism DiskAutomorphism::inverse() const {
    const Complex w0 = -lambda() * z0_;
    if (rational_) return rational(-rational_->p, rational_->q, w0);
    return {-theta_, w0};
}

DiskAutomorphism DiskAutomorphism::mirrored() const {
    const Complex w0 = std::conj(z0_);
    if (rational_) return rational(-rational_->p, rational_->q, w0);
    return {-theta_, w0};
}

MoebiusWord::MoebiusWord(DiskAutomorphism map, std::int64_t exp) {
    if (exp != 0) factors_.push_back({std::move(map), exp});
}

MoebiusWord::MoebiusWord(std::vector<WordFactor> factors) {
    for (auto& f : factors) {
        if (f.exp != 0) factors_.push_back(std::move(f));
    }
}

Complex apply_power(const DiskAutomorphism& map, std::int64_t exp, Complex z) {
    if (exp == 0) return z;
    const DiskAutomorphism step = exp > 0 ? map : map.inverse();
    const std::int64_t n = exp > 0 ? exp : -exp;
    for (std::int64_t k = 0; k < n; ++k) z = step.apply(z);
    return z;
}

Complex MoebiusWord::apply(Complex z) const {
    for (auto it = factors_.rbegin(); it != factors_.rend(); ++it) {
        z = apply_power(it->map, it->exp, z);
    }
    return z;
}

Complex MoebiusWord::evaluate(Complex z) const {
    if (!(std::abs(z) <= 1.0 + kDiskSlack)) {
        std::ostringstream os;
        os << "|z| = " << std::abs(z) << " outside the closed unit disk";
        throw DomainError(os.str());
    }
    return apply(z);
}

Complex evaluate(const DiskAutomorphism& phi, Complex z) { return phi.evaluate(z); }
Complex evaluate(const MoebiusWord& w, Complex z) { return w.evaluate(z); }

MoebiusWord compose(const MoebiusWord& f, const MoebiusWord& g) {
    std::vector<WordFactor> out = f.factors();
    for (const WordFactor& factor : g.factors()) {
        if (!out.empty() && out.back().map == factor.map) {
            out.back().exp += factor.exp;
            if (out.back().exp == 0) out.pop_back();
        } else {
            out.push_back(factor);
        }
    }
    return MoebiusWord(std::move(out));
}

MoebiusWord invert(const MoebiusWord& f) {
    std::vector<WordFactor> out;
    out.reserve(f.factors().size());
    for (auto it = f.factors().rbegin(); it != f.factors().rend(); ++it) {
        out.push_back({it->map, -it->exp});
    }
    return MoebiusWord(std::move(out));
}

MoebiusWord power(const MoebiusWord& f, std::int64_t n) {
    if (n == 0 || f.empty()) return {};
    if (f.factors().size() == 1) {
        const WordFactor& only = f.factors().front();
        return MoebiusWord(only.map, only.exp * n);
    }
    const MoebiusWord base = n > 0 ? f : invert(f);
    const std::int64_t count = n > 0 ? n : -n;
    MoebiusWord out;
    for (std::int64_t k = 0; k < count; ++k) out = compose(out, base);
    return out;
}

DiskAutomorphism normalize(const MoebiusWord& w) {
    if (w.empty()) return {};
    const Complex z0 = invert(w).apply(Complex{});
    if (!(std::abs(z0) < 1.0)) throw NumericalError("normalize: recovered |z0| >= 1");
    // phi(1) = lambda (1 - z0) / (1 - conj(z0)).
    Complex lambda = w.apply(Complex{1.0, 0.0}) * (1.0 - std::conj(z0)) / (1.0 - z0);
    lambda /= std::abs(lambda);
    double theta = std::arg(lambda) / (2.0 * kPi);
    if (theta < 0.0) theta += 1.0;
    if (theta > 1.0 - 1e-15 || theta < 1e-15) theta = 0.0;
    DiskAutomorphism out(theta, z0);

    static const std::vector<Complex> samples = disk_samples(16, 16);
    const double residual = sup_distance([&](Complex z) { return out.apply(z); },
                                         [&](Complex z) { return w.apply(z); }, samples);
    if (!(residual <= 1e-10)) {
        std::ostringstream os;
        os << "normalize: residual " << residual << " exceeds 1e-10";
        throw NumericalError(os.str());
    }
    return out;
}

std::string to_string(ClassTag tag) {
    switch (tag) {
        case ClassTag::Identity: return "identity";
        case ClassTag::Hyperbolic: return "hyperbolic";
        case ClassTag::Parabolic: return "parabolic";
        case ClassTag::Elliptic: return "elliptic";
    }
    return "unknown";
}

AutomorphismClass classify(const DiskAutomorphism& phi, double tol) {
    const double theta = phi.theta();
    const double margin = std::abs(phi.z0()) - std::abs(std::sin(kPi * theta));
    AutomorphismClass out;
    out.margin = margin;
    if ((theta < tol || theta > 1.0 - tol) && std::abs(phi.z0()) < tol) {
        out.tag = ClassTag::Identity;
    } else if (margin > tol) {
        out.tag = ClassTag::Hyperbolic;
    } else if (margin < -tol) {
        out.tag = ClassTag::Elliptic;
    } else {
        out.tag = ClassTag::Parabolic;
    }
    return out;
}

FixedPointData fixed_points(const DiskAutomorphism& phi, double tol) {
    const AutomorphismClass cls = classify(phi, tol);
    if (cls.tag == ClassTag::Identity) throw ClassError("the identity fixes every point");

    const Complex z0 = phi.z0();
    const double s = std::sin(kPi * phi.theta());
    const double gap = std::norm(z0) - s * s;
    const Complex half_turn = std::polar(1.0, kPi * phi.theta());

    FixedPointData out;
    out.discriminant = 4.0 * phi.lambda() * gap;

    const auto multiplier = [&](Complex p) { return std::abs(phi.derivative(p)); };

    if (z0 == Complex{}) {
        out.points = {Complex{}};
        out.multipliers = {1.0};
        return out;
    }

    // Roots times conj(z0): w = e^{i pi theta} (-i s +/- sqrt(gap)).
    const Complex i{0.0, 1.0};
    const Complex root_gap = gap >= 0.0 ? Complex{std::sqrt(gap), 0.0} : i * std::sqrt(-gap);
    const Complex zc = std::conj(z0);

    if (cls.tag == ClassTag::Parabolic) {
        Complex p = half_turn * (-i * s) / zc;
        p /= std::abs(p);
        out.points = {p};
        out.multipliers = {multiplier(p)};
        return out;
    }

    const Complex w_plus = half_turn * (-i * s + root_gap);
    const Complex w_minus = half_turn * (-i * s - root_gap);
    const Complex w_big = std::abs(w_plus) >= std::abs(w_minus) ? w_plus : w_minus;
    const Complex r_big = w_big / zc;
    // Product of the roots is -lambda z0 / conj(z0).
    const Complex r_small = (-phi.lambda() * z0 / zc) / r_big;

    if (cls.tag == ClassTag::Hyperbolic) {
        Complex p = r_big / std::abs(r_big);
        Complex q = r_small / std::abs(r_small);
        double mp = multiplier(p);
        double mq = multiplier(q);
        if (mp < mq) {
            std::swap(p, q);
            std::swap(mp, mq);
        }
        out.points = {p, q};
        out.multipliers = {mp, mq};
        return out;
    }

    const Complex inner = std::abs(r_small) <= std::abs(r_big) ? r_small : r_big;
    out.points = {inner};
    out.multipliers = {multiplier(inner)};
    return out;
}

Complex attractive_fixed_point(const DiskAutomorphism& phi, double tol) {
    const AutomorphismClass cls = classify(phi, tol);
    if (cls.tag != ClassTag::Hyperbolic && cls.tag != ClassTag::Parabolic) {
        throw ClassError("attractive fixed point needs a hyperbolic or parabolic map, got " +
                         to_string(cls.tag));
    }
    const FixedPointData fp = fixed_points(phi, tol);
    return fp.points.back();
}

Complex repulsive_fixed_point(const DiskAutomorphism& phi, double tol) {
    const AutomorphismClass cls = classify(phi, tol);
    if (cls.tag != ClassTag::Hyperbolic && cls.tag != ClassTag::Parabolic) {
        throw ClassError("repulsive fixed point needs a hyperbolic or parabolic map, got " +
                         to_string(cls.tag));
    }
    return fixed_points(phi, tol).points.front();
}

std::vector<Complex> disk_samples(int n_interior, int n_boundary) {
    std::vector<Complex> out;
    out.reserve(static_cast<std::size_t>(n_interior + n_boundary));
    for (int k = 1; k <= n_interior; ++k) {
        const double r = 0.98 * std::sqrt(radical_inverse(k, 2));
        const double t = 2.0 * kPi * radical_inverse(k, 3);
        out.push_back(std::polar(r, t));
    }
    for (int k = 0; k < n_boundary; ++k) {
        out.push_back(std::polar(1.0, 2.0 * kPi * k / n_boundary));
    }
    return out;
}

}  // namespace diskcp
