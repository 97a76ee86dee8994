#include "diskcp/operator_models.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "diskcp/errors.hpp"

namespace diskcp {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void require_class(const DiskAutomorphism& phi, ClassTag tag, const RepKind& kind) {
    const ClassTag got = classify(phi).tag;
    if (got != tag) {
        std::ostringstream os;
        os << kind_name(kind) << " representation needs a " << to_string(tag) << " map, got "
           << to_string(got);
        throw KindMismatch(os.str());
    }
}

void require_rotation(const DiskAutomorphism& phi, const RepKind& kind) {
    require_class(phi, ClassTag::Elliptic, kind);
    if (std::abs(phi.z0()) > 1e-12) {
        throw KindMismatch(kind_name(kind) + " representation needs a rotation (z0 = 0)");
    }
}

void require_unit(Complex c, const char* what) {
    if (std::abs(std::abs(c) - 1.0) > 1e-12) throw DomainError(std::string(what) + " must lie on T");
}

void require_not_fixed(const DiskAutomorphism& phi, Complex x, const RepKind& kind) {
    if (!(std::abs(x) <= 1.0 + kDiskSlack)) throw DomainError("orbit base point outside the disk");
    for (const Complex& p : fixed_points(phi).points) {
        if (std::abs(x - p) < 1e-12) {
            throw KindMismatch(kind_name(kind) + " representation needs a base point that is not fixed");
        }
    }
}

RationalAngle rational_for(const DiskAutomorphism& phi, const EllipticRational& kind) {
    if (kind.q <= 0) throw DomainError("EllipticRational needs q > 0");
    const DiskAutomorphism reference = DiskAutomorphism::rational(kind.p, kind.q);
    const RationalAngle wanted = *reference.rational_theta();
    if (phi.rational_theta()) {
        if (*phi.rational_theta() != wanted) {
            throw RationalityRequired("EllipticRational p/q differs from the exact rotation angle");
        }
        return wanted;
    }
    if (std::abs(phi.theta() - wanted.value()) > 1e-14) {
        throw RationalityRequired("EllipticRational needs theta = p/q");
    }
    return wanted;
}

/// Sample points and the matrix of U for each kind.
struct Frame {
    std::vector<Complex> points;
    Eigen::MatrixXcd u;
    // For the q x q model the shift is cyclic; `cyclic_phase` is eta.
    bool cyclic = false;
    Complex phase{1.0, 0.0};
};

Eigen::MatrixXcd shift_matrix(Eigen::Index size, Complex phase) {
    Eigen::MatrixXcd s = Eigen::MatrixXcd::Zero(size, size);
    for (Eigen::Index j = 0; j + 1 < size; ++j) s(j + 1, j) = phase;
    return s;
}

Frame frame_for(const DiskAutomorphism& phi, const RepKind& kind, std::int64_t N) {
    if (N < 0) throw DomainError("half width must be >= 0");
    const auto size = static_cast<Eigen::Index>(2 * N + 1);
    return std::visit(
        Overloaded{
            [&](const HyperbolicOrbit& k) {
                require_class(phi, ClassTag::Hyperbolic, kind);
                require_not_fixed(phi, k.x, kind);
                return Frame{orbit(phi, k.x, -N, N), shift_matrix(size, 1.0)};
            },
            [&](const ParabolicOrbit& k) {
                require_class(phi, ClassTag::Parabolic, kind);
                require_not_fixed(phi, k.x, kind);
                return Frame{orbit(phi, k.x, -N, N), shift_matrix(size, 1.0)};
            },
            [&](const Character& k) {
                if (!(std::abs(k.fixed_point) <= 1.0 + kDiskSlack) ||
                    std::abs(phi.apply(k.fixed_point) - k.fixed_point) > 1e-9) {
                    throw KindMismatch("Character representation needs a fixed point of phi");
                }
                Eigen::MatrixXcd u(1, 1);
                u(0, 0) = std::polar(1.0, 2.0 * kPi * k.theta);
                Frame f{{k.fixed_point}, u};
                f.cyclic = true;
                f.phase = u(0, 0);
                return f;
            },
            [&](const EllipticCircle& k) {
                require_rotation(phi, kind);
                if (!(k.radius >= 0.0 && k.radius <= 1.0)) throw DomainError("circle radius must be in [0, 1]");
                require_unit(k.fiber, "fiber");
                require_unit(k.u_phase, "u_phase");
                return Frame{orbit(phi, k.radius * k.fiber, -N, N), shift_matrix(size, k.u_phase)};
            },
            [&](const EllipticRational& k) {
                require_rotation(phi, kind);
                const RationalAngle r = rational_for(phi, k);
                require_unit(k.eta, "eta");
                if (!(std::abs(k.lambda) <= 1.0 + 1e-12)) throw DomainError("|lambda| must be <= 1");
                const auto q = static_cast<Eigen::Index>(r.q);
                Frame f;
                f.points.resize(static_cast<std::size_t>(q));
                for (Eigen::Index j = 0; j < q; ++j) f.points[static_cast<std::size_t>(j)] = k.lambda * r.root_power(j);
                f.u = Eigen::MatrixXcd::Zero(q, q);
                for (Eigen::Index j = 0; j < q; ++j) f.u((j + 1) % q, j) = k.eta;
                f.cyclic = true;
                f.phase = k.eta;
                return f;
            },
        },
        kind);
}

Complex int_pow(Complex base, std::int64_t n) {
    Complex out{1.0, 0.0};
    Complex b = n >= 0 ? base : 1.0 / base;
    std::int64_t e = n >= 0 ? n : -n;
    while (e > 0) {
        if (e & 1) out *= b;
        b *= b;
        e >>= 1;
    }
    return out;
}

Eigen::MatrixXcd assemble(const CrossedElement& a, const Frame& frame) {
    const auto size = static_cast<Eigen::Index>(frame.points.size());
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(size, size);
    for (const auto& [n, f] : a.coefficients()) {
        std::vector<Complex> values(frame.points.size());
        for (std::size_t i = 0; i < values.size(); ++i) values[i] = f.evaluate(frame.points[i]);
        if (frame.cyclic) {
            const Complex ph = int_pow(frame.phase, n);
            for (Eigen::Index j = 0; j < size; ++j) {
                Eigen::Index i = static_cast<Eigen::Index>((j + n) % size);
                if (i < 0) i += size;
                m(i, j) += values[static_cast<std::size_t>(i)] * ph;
            }
        } else {
            const Complex ph = frame.u.rows() > 1 ? int_pow(frame.u(1, 0), n) : Complex{1.0, 0.0};
            for (Eigen::Index j = 0; j < size; ++j) {
                const Eigen::Index i = j + static_cast<Eigen::Index>(n);
                if (i >= 0 && i < size) m(i, j) += values[static_cast<std::size_t>(i)] * ph;
            }
        }
    }
    return m;
}

}  // namespace

std::string kind_name(const RepKind& kind) {
    return std::visit(Overloaded{
                          [](const HyperbolicOrbit&) { return std::string("hyperbolic_orbit"); },
                          [](const ParabolicOrbit&) { return std::string("parabolic_orbit"); },
                          [](const Character&) { return std::string("character"); },
                          [](const EllipticCircle&) { return std::string("elliptic_circle"); },
                          [](const EllipticRational&) { return std::string("elliptic_rational"); },
                      },
                      kind);
}

bool TruncatedRep::is_orbit_kind() const {
    return std::holds_alternative<HyperbolicOrbit>(kind) || std::holds_alternative<ParabolicOrbit>(kind) ||
           std::holds_alternative<EllipticCircle>(kind);
}

TruncatedRep represent(const CrossedElement& a, const DiskAutomorphism& phi, const RepKind& kind,
                       std::int64_t half_width) {
    Frame frame = frame_for(phi, kind, half_width);
    TruncatedRep out;
    out.kind = kind;
    out.phi = phi;
    out.half_width = frame.cyclic ? 0 : half_width;
    out.matrix = assemble(a, frame);
    out.points = std::move(frame.points);
    return out;
}

Eigen::MatrixXcd unitary_image(const DiskAutomorphism& phi, const RepKind& kind, std::int64_t half_width) {
    return represent(CrossedElement::generator_u(), phi, kind, half_width).matrix;
}

Eigen::MatrixXcd interior_block(const Eigen::MatrixXcd& m, std::int64_t half_width, std::int64_t margin) {
    const std::int64_t keep = half_width - margin;
    if (keep < 0) return Eigen::MatrixXcd(0, 0);
    const auto start = static_cast<Eigen::Index>(margin);
    const auto len = static_cast<Eigen::Index>(2 * keep + 1);
    return m.block(start, start, len, len);
}

double max_abs(const Eigen::MatrixXcd& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

double operator_norm(const Eigen::MatrixXcd& m) {
    if (m.size() == 0) return 0.0;
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(m);
    return svd.singularValues()(0);
}

double covariance_residual(const DiskAutomorphism& phi, const RepKind& kind, std::int64_t half_width) {
    const TruncatedRep a = represent(CrossedElement::generator_a(), phi, kind, half_width);
    const Eigen::MatrixXcd u = unitary_image(phi, kind, half_width);
    const CrossedElement moved = CrossedElement::embed(ExprFun::z().precompose(MoebiusWord(phi)));
    const Eigen::MatrixXcd target = represent(moved, phi, kind, half_width).matrix;
    const Eigen::MatrixXcd lhs = u.adjoint() * a.matrix * u;
    if (a.half_width == 0) return max_abs(lhs - target);
    return max_abs(interior_block(lhs - target, half_width, 1));
}

double covariance_residual(const DiskAutomorphism& phi, Complex x, std::int64_t half_width) {
    switch (classify(phi).tag) {
        case ClassTag::Hyperbolic: return covariance_residual(phi, HyperbolicOrbit{x}, half_width);
        case ClassTag::Parabolic: return covariance_residual(phi, ParabolicOrbit{x}, half_width);
        case ClassTag::Elliptic: {
            const double r = std::abs(x);
            const Complex fiber = r > 0.0 ? x / r : Complex{1.0, 0.0};
            return covariance_residual(phi, EllipticCircle{r, fiber, {1.0, 0.0}}, half_width);
        }
        case ClassTag::Identity: break;
    }
    throw KindMismatch("covariance_residual: the identity has no orbit representation");
}

SymbolPair symbol(const CrossedElement& a, const DiskAutomorphism& phi) {
    if (classify(phi).tag != ClassTag::Hyperbolic) throw KindMismatch("symbol needs a hyperbolic map");
    const FixedPointData fp = fixed_points(phi);
    const Complex repulsive = fp.points[0];
    const Complex attractive = fp.points[1];
    Laurent::Coefficients minus, plus;
    for (const auto& [n, f] : a.coefficients()) {
        minus[-n] += f.evaluate(repulsive);
        plus[n] += f.evaluate(attractive);
    }
    return {Laurent(std::move(minus)), Laurent(std::move(plus))};
}

SymbolPair symbol_product(const SymbolPair& a, const SymbolPair& b) {
    return {a.minus * b.minus, a.plus * b.plus};
}

SymbolPair symbol_adjoint(const SymbolPair& a) { return {a.minus.adjoint(), a.plus.adjoint()}; }

double distance(const SymbolPair& a, const SymbolPair& b) {
    return std::max(distance(a.minus, b.minus), distance(a.plus, b.plus));
}

SymbolPair estimate_symbol(const TruncatedRep& rep, std::int64_t bandwidth) {
    if (!std::holds_alternative<HyperbolicOrbit>(rep.kind)) {
        throw KindMismatch("estimate_symbol needs a hyperbolic orbit representation");
    }
    const auto size = rep.matrix.rows();
    Laurent::Coefficients minus, plus;
    for (std::int64_t n = -bandwidth; n <= bandwidth; ++n) {
        const auto d = static_cast<Eigen::Index>(n);
        if (std::abs(d) >= size) continue;
        // Diagonal i - j = n: first entry (far negative index) and last entry.
        const Eigen::Index i_first = std::max<Eigen::Index>(0, d);
        const Eigen::Index i_last = std::min<Eigen::Index>(size - 1, size - 1 + d);
        minus[-n] += rep.matrix(i_first, i_first - d);
        plus[n] += rep.matrix(i_last, i_last - d);
    }
    return {Laurent(std::move(minus)), Laurent(std::move(plus))};
}

double residual_tail_norm(const Eigen::MatrixXcd& residual, std::int64_t half_width, std::int64_t margin) {
    std::vector<Eigen::Index> idx;
    for (std::int64_t k = -half_width; k <= half_width; ++k) {
        if (k > margin || k < -margin) idx.push_back(static_cast<Eigen::Index>(k + half_width));
    }
    if (idx.empty()) return 0.0;
    const Eigen::MatrixXcd tail = residual(idx, idx);
    return operator_norm(tail);
}

double BlockDecomposition::residual_tail_norm(std::int64_t margin) const {
    return diskcp::residual_tail_norm(compact_residual, half_width, margin);
}

BlockDecomposition block_decompose(const TruncatedRep& rep, const CrossedElement& a) {
    if (!std::holds_alternative<HyperbolicOrbit>(rep.kind)) {
        throw KindMismatch("block_decompose needs a hyperbolic orbit representation");
    }
    const std::int64_t N = rep.half_width;
    const auto n_minus = static_cast<Eigen::Index>(N);
    const auto n_plus = static_cast<Eigen::Index>(N + 1);

    BlockDecomposition out;
    out.symbols = symbol(a, rep.phi);
    out.half_width = N;
    out.toeplitz_minus = out.symbols.minus.toeplitz(n_minus);
    out.toeplitz_plus = out.symbols.plus.toeplitz(n_plus);
    out.assembly = Eigen::MatrixXcd::Zero(rep.matrix.rows(), rep.matrix.cols());
    out.assembly.block(n_minus, n_minus, n_plus, n_plus) = out.toeplitz_plus;
    // Index -1 - j sits at row N - 1 - j.
    for (Eigen::Index r = 0; r < n_minus; ++r) {
        for (Eigen::Index c = 0; c < n_minus; ++c) {
            out.assembly(n_minus - 1 - r, n_minus - 1 - c) = out.toeplitz_minus(r, c);
        }
    }
    out.compact_residual = rep.matrix - out.assembly;
    return out;
}

double ParabolicStructure::residual_tail_norm(std::int64_t margin) const {
    return diskcp::residual_tail_norm(compact_residual, half_width, margin);
}

std::vector<double> ParabolicStructure::tail_norms(const std::vector<std::int64_t>& margins) const {
    std::vector<double> out;
    out.reserve(margins.size());
    for (std::int64_t m : margins) out.push_back(residual_tail_norm(m));
    return out;
}

ParabolicStructure parabolic_structure_residual(const TruncatedRep& rep, const CrossedElement& a) {
    if (!std::holds_alternative<ParabolicOrbit>(rep.kind)) {
        throw KindMismatch("parabolic_structure_residual needs a parabolic orbit representation");
    }
    const Complex p = fixed_points(rep.phi).points[0];
    Laurent::Coefficients c;
    for (const auto& [n, f] : a.coefficients()) c[n] += f.evaluate(p);
    ParabolicStructure out;
    out.laurent = Laurent(std::move(c));
    out.half_width = rep.half_width;
    out.compact_residual = rep.matrix - out.laurent.toeplitz(rep.matrix.rows());
    return out;
}

EllipticFieldReport elliptic_field_check(const CrossedElement& a, const DiskAutomorphism& phi,
                                         const std::vector<double>& t_grid, std::int64_t half_width,
                                         int modes) {
    if (classify(phi).tag != ClassTag::Elliptic || std::abs(phi.z0()) > 1e-12) {
        throw KindMismatch("elliptic_field_check needs a rotation");
    }
    if (modes < 1) throw DomainError("elliptic_field_check needs at least one sample per circle");
    EllipticFieldReport report;

    for (double t : t_grid) {
        if (!(t >= 0.0 && t <= 1.0)) throw DomainError("field parameter t must be in [0, 1]");
        FieldSample sample;
        sample.t = t;
        for (const auto& [n, f] : a.coefficients()) {
            std::vector<Complex> values(static_cast<std::size_t>(modes));
            for (int j = 0; j < modes; ++j) {
                values[static_cast<std::size_t>(j)] = f.evaluate(std::polar(t, 2.0 * kPi * j / modes));
            }
            for (int m = -(modes / 2) + 1; m <= modes / 2; ++m) {
                Complex acc{};
                for (int j = 0; j < modes; ++j) {
                    acc += values[static_cast<std::size_t>(j)] * std::polar(1.0, -2.0 * kPi * m * j / modes);
                }
                acc /= static_cast<double>(modes);
                if (m == 0) {
                    // At t = 0 all samples coincide; take the value itself.
                    if (t == 0.0) acc = values[0];
                } else if (t == 0.0) {
                    acc = Complex{};
                }
                sample.modes[{n, m}] = acc;
                if (m != 0) sample.v_content += std::abs(acc);
            }
        }
        report.samples.push_back(std::move(sample));
    }

    if (!report.samples.empty()) {
        const FieldSample& first = report.samples.front();
        report.v_content_at_zero = first.v_content;
        Laurent::Coefficients scalar;
        for (const auto& [key, c] : first.modes) {
            if (key.second == 0) scalar[key.first] += c;
        }
        report.scalar_part = Laurent(std::move(scalar));
        for (const FieldSample& s : report.samples) {
            for (const auto& [key, c] : s.modes) {
                auto it = first.modes.find(key);
                const Complex base = it == first.modes.end() ? Complex{} : it->second;
                report.variation_in_t = std::max(report.variation_in_t, std::abs(c - base));
            }
        }
    }

    // Rotation-algebra relation VU = e^{2 i pi theta} UV.
    const Complex omega = phi.lambda();
    if (phi.rational_theta()) {
        const RationalAngle r = *phi.rational_theta();
        report.rational_model = true;
        const TruncatedRep v = represent(CrossedElement::generator_a(), phi,
                                         EllipticRational{r.p, r.q, {1.0, 0.0}, {1.0, 0.0}}, 0);
        const Eigen::MatrixXcd u = unitary_image(phi, EllipticRational{r.p, r.q, {1.0, 0.0}, {1.0, 0.0}}, 0);
        report.relation_residual = max_abs(v.matrix * u - omega * u * v.matrix);
    } else {
        const RepKind circle = EllipticCircle{1.0, {1.0, 0.0}, {1.0, 0.0}};
        const TruncatedRep v = represent(CrossedElement::generator_a(), phi, circle, half_width);
        const Eigen::MatrixXcd u = unitary_image(phi, circle, half_width);
        report.relation_residual = max_abs(v.matrix * u - omega * u * v.matrix);
    }
    return report;
}

std::vector<double> truncated_norm(const CrossedElement& a, const DiskAutomorphism& phi, const RepKind& kind,
                                   const std::vector<std::int64_t>& half_widths) {
    std::vector<double> out;
    out.reserve(half_widths.size());
    for (std::int64_t n : half_widths) out.push_back(operator_norm(represent(a, phi, kind, n).matrix));
    return out;
}

std::vector<Complex> truncated_spectrum(const TruncatedRep& rep) {
    const Eigen::MatrixXcd& m = rep.matrix;
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
        for (Eigen::Index i = 0; i < m.rows(); ++i) {
            if (i != j && m(i, j) != Complex{}) {
                throw KindMismatch("truncated_spectrum needs the image of a diagonal element");
            }
        }
    }
    std::vector<Complex> out(static_cast<std::size_t>(m.rows()));
    for (Eigen::Index i = 0; i < m.rows(); ++i) out[static_cast<std::size_t>(i)] = m(i, i);
    return out;
}

double hausdorff_distance(const std::vector<Complex>& points, const OrbitClosureDescr& closure,
                          int circle_samples) {
    double forward = 0.0;
    for (const Complex& p : points) forward = std::max(forward, closure.distance_to(p));

    std::vector<Complex> reference = closure.sample_orbit;
    reference.insert(reference.end(), closure.limit_points.begin(), closure.limit_points.end());
    if (closure.kind == LimitKind::Circle) {
        for (int j = 0; j < circle_samples; ++j) {
            reference.push_back(closure.circle_center +
                                std::polar(closure.circle_radius, 2.0 * kPi * j / circle_samples));
        }
    }
    double backward = 0.0;
    for (const Complex& r : reference) {
        double best = std::numeric_limits<double>::infinity();
        for (const Complex& p : points) best = std::min(best, std::abs(r - p));
        backward = std::max(backward, best);
    }
    return std::max(forward, backward);
}

}  // namespace diskcp
