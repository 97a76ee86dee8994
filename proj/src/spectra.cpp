#include "diskcp/spectra.hpp"

#include <algorithm>
#include <cmath>

#include "diskcp/dynamics.hpp"
#include "diskcp/errors.hpp"

namespace diskcp {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

Complex unit_or_throw(Complex w, const char* what) {
    if (!std::isfinite(w.real()) || !std::isfinite(w.imag()) || std::abs(std::abs(w) - 1.0) > 1e-9) {
        throw DomainError(std::string(what) + " must lie on T");
    }
    return w / std::abs(w);
}

void check_unit_interval(double v, const char* what, bool open_at_zero = false) {
    if (!std::isfinite(v) || v < 0.0 || v > 1.0 || (open_at_zero && v <= 0.0)) {
        throw DomainError(std::string(what) + (open_at_zero ? " must be in (0, 1]" : " must be in [0, 1]"));
    }
}

SpectrumPoint validated(SpectrumModel model, const SpectrumPoint& p) {
    auto wrong = [&]() -> SpectrumPoint {
        throw DomainError(point_kind_name(p) + " is not a point of the " + to_string(model) + " model");
    };
    return std::visit(
        Overloaded{
            [&](const OrbitClassPoint& q) -> SpectrumPoint {
                if (model != SpectrumModel::Hyperbolic) return wrong();
                check_unit_interval(q.u, "u");
                return OrbitClassPoint{q.u, unit_or_throw(q.omega, "omega")};
            },
            [&](const BoundaryChar& q) -> SpectrumPoint {
                if (model != SpectrumModel::Hyperbolic) return wrong();
                if (q.epsilon != 1 && q.epsilon != -1) throw DomainError("epsilon must be -1 or 1");
                return BoundaryChar{q.epsilon, unit_or_throw(q.omega, "omega")};
            },
            [&](const ParabolicClassPoint& q) -> SpectrumPoint {
                if (model != SpectrumModel::Parabolic) return wrong();
                if (!(std::abs(q.point) <= 1.0 + kDiskSlack)) throw DomainError("orbit class label outside the disk");
                if (std::abs(q.point - 1.0) < 1e-12) throw DomainError("1 is the character set, not an orbit class");
                return q;
            },
            [&](const CharPoint& q) -> SpectrumPoint {
                if (model != SpectrumModel::Parabolic && model != SpectrumModel::EllipticIrrational) return wrong();
                return CharPoint{unit_or_throw(q.omega, "omega")};
            },
            [&](const FiberPoint& q) -> SpectrumPoint {
                if (model != SpectrumModel::EllipticIrrational) return wrong();
                check_unit_interval(q.r, "r", true);
                return q;
            },
            [&](const TorusPoint& q) -> SpectrumPoint {
                if (model != SpectrumModel::EllipticRational) return wrong();
                check_unit_interval(q.t, "t");
                return TorusPoint{q.t, unit_or_throw(q.alpha, "alpha"), unit_or_throw(q.beta, "beta")};
            },
        },
        p);
}

void validate_flags(SpectrumModel model, const SpectrumFlags& f) {
    if (f.all_boundary_chars && model != SpectrumModel::Hyperbolic) {
        throw DomainError("all_boundary_chars only applies to the hyperbolic model");
    }
    if (f.all_chars && model != SpectrumModel::Parabolic && model != SpectrumModel::EllipticIrrational) {
        throw DomainError("all_chars only applies to the parabolic and elliptic_irrational models");
    }
    if (f.fibers_accumulate_at_zero && model != SpectrumModel::EllipticIrrational) {
        throw DomainError("fibers_accumulate_at_zero only applies to the elliptic_irrational model");
    }
}

std::vector<double> key(const SpectrumPoint& p) {
    std::vector<double> k{static_cast<double>(p.index())};
    std::visit(Overloaded{
                   [&](const OrbitClassPoint& q) { k.insert(k.end(), {q.u, q.omega.real(), q.omega.imag()}); },
                   [&](const BoundaryChar& q) {
                       k.insert(k.end(), {double(q.epsilon), q.omega.real(), q.omega.imag()});
                   },
                   [&](const ParabolicClassPoint& q) { k.insert(k.end(), {q.point.real(), q.point.imag()}); },
                   [&](const CharPoint& q) { k.insert(k.end(), {q.omega.real(), q.omega.imag()}); },
                   [&](const FiberPoint& q) { k.push_back(q.r); },
                   [&](const TorusPoint& q) {
                       k.insert(k.end(), {q.t, q.alpha.real(), q.alpha.imag(), q.beta.real(), q.beta.imag()});
                   },
               },
               p);
    return k;
}

bool same_point(const SpectrumPoint& a, const SpectrumPoint& b) {
    if (a.index() != b.index()) return false;
    const auto ka = key(a);
    const auto kb = key(b);
    for (std::size_t i = 0; i < ka.size(); ++i) {
        if (std::abs(ka[i] - kb[i]) > kSpectrumTolerance) return false;
    }
    return true;
}

bool covered_by_flags(const SpectrumFlags& f, const SpectrumPoint& p) {
    if (f.all_boundary_chars && std::holds_alternative<BoundaryChar>(p)) return true;
    if (f.all_chars && std::holds_alternative<CharPoint>(p)) return true;
    return false;
}

bool flags_subset(const SpectrumFlags& a, const SpectrumFlags& b) {
    return (!a.all_boundary_chars || b.all_boundary_chars) && (!a.all_chars || b.all_chars) &&
           (!a.fibers_accumulate_at_zero || b.fibers_accumulate_at_zero);
}

}  // namespace

std::string to_string(SpectrumModel model) {
    switch (model) {
        case SpectrumModel::Hyperbolic: return "hyperbolic";
        case SpectrumModel::Parabolic: return "parabolic";
        case SpectrumModel::EllipticIrrational: return "elliptic_irrational";
        case SpectrumModel::EllipticRational: return "elliptic_rational";
    }
    return "unknown";
}

SpectrumModel parse_spectrum_model(const std::string& name) {
    for (SpectrumModel m : {SpectrumModel::Hyperbolic, SpectrumModel::Parabolic, SpectrumModel::EllipticIrrational,
                            SpectrumModel::EllipticRational}) {
        if (to_string(m) == name) return m;
    }
    throw ParseError("unknown spectrum model '" + name + "'");
}

std::string point_kind_name(const SpectrumPoint& p) {
    return std::visit(Overloaded{
                          [](const OrbitClassPoint&) { return std::string("orbit_class"); },
                          [](const BoundaryChar&) { return std::string("boundary_char"); },
                          [](const ParabolicClassPoint&) { return std::string("parabolic_class"); },
                          [](const CharPoint&) { return std::string("char"); },
                          [](const FiberPoint&) { return std::string("fiber"); },
                          [](const TorusPoint&) { return std::string("torus_point"); },
                      },
                      p);
}

SpectrumSet::SpectrumSet(SpectrumModel model, std::vector<SpectrumPoint> points, SpectrumFlags flags)
    : model_(model), flags_(flags) {
    validate_flags(model, flags);
    points_.reserve(points.size());
    for (const SpectrumPoint& p : points) points_.push_back(validated(model, p));
}

bool SpectrumSet::empty() const {
    return points_.empty() && !flags_.all_boundary_chars && !flags_.all_chars && !flags_.fibers_accumulate_at_zero;
}

SpectrumSet SpectrumSet::canonical() const {
    std::vector<SpectrumPoint> kept;
    for (const SpectrumPoint& p : points_) {
        if (!covered_by_flags(flags_, p)) kept.push_back(p);
    }
    std::sort(kept.begin(), kept.end(),
              [](const SpectrumPoint& a, const SpectrumPoint& b) { return key(a) < key(b); });
    std::vector<SpectrumPoint> unique;
    for (const SpectrumPoint& p : kept) {
        bool dup = false;
        for (const SpectrumPoint& q : unique) {
            if (same_point(p, q)) {
                dup = true;
                break;
            }
        }
        if (!dup) unique.push_back(p);
    }
    SpectrumSet out(model_);
    out.points_ = std::move(unique);
    out.flags_ = flags_;
    return out;
}

bool SpectrumSet::contains(const SpectrumPoint& p) const {
    if (covered_by_flags(flags_, p)) return true;
    return std::any_of(points_.begin(), points_.end(), [&](const SpectrumPoint& q) { return same_point(p, q); });
}

bool operator==(const SpectrumSet& a, const SpectrumSet& b) {
    return a.model() == b.model() && is_subset(a, b) && is_subset(b, a);
}

SpectrumSet closure(const SpectrumSet& s) {
    SpectrumFlags f = s.flags();
    const auto& pts = s.points();
    auto any_of_kind = [&](auto tag) {
        using T = decltype(tag);
        return std::any_of(pts.begin(), pts.end(), [](const SpectrumPoint& p) { return std::holds_alternative<T>(p); });
    };
    switch (s.model()) {
        case SpectrumModel::Hyperbolic:
            if (any_of_kind(OrbitClassPoint{})) f.all_boundary_chars = true;
            break;
        case SpectrumModel::Parabolic:
            if (any_of_kind(ParabolicClassPoint{})) f.all_chars = true;
            break;
        case SpectrumModel::EllipticIrrational:
            if (f.fibers_accumulate_at_zero) f.all_chars = true;
            break;
        case SpectrumModel::EllipticRational:
            break;
    }
    return SpectrumSet(s.model(), pts, f).canonical();
}

bool is_closed(const SpectrumSet& s) { return closure(s) == s; }

SpectrumSet set_union(const SpectrumSet& a, const SpectrumSet& b) {
    if (a.model() != b.model()) throw DomainError("set_union: models differ");
    std::vector<SpectrumPoint> pts = a.points();
    pts.insert(pts.end(), b.points().begin(), b.points().end());
    SpectrumFlags f;
    f.all_boundary_chars = a.flags().all_boundary_chars || b.flags().all_boundary_chars;
    f.all_chars = a.flags().all_chars || b.flags().all_chars;
    f.fibers_accumulate_at_zero = a.flags().fibers_accumulate_at_zero || b.flags().fibers_accumulate_at_zero;
    return SpectrumSet(a.model(), std::move(pts), f).canonical();
}

bool is_subset(const SpectrumSet& a, const SpectrumSet& b) {
    if (a.model() != b.model()) return false;
    if (!flags_subset(a.flags(), b.flags())) return false;
    return std::all_of(a.points().begin(), a.points().end(), [&](const SpectrumPoint& p) { return b.contains(p); });
}

SpectrumSet random_spectrum_set(SpectrumModel model, std::mt19937_64& rng, int max_points) {
    std::uniform_int_distribution<int> pool_index(0, 5);
    std::uniform_int_distribution<int> count(0, std::max(0, max_points));
    std::bernoulli_distribution coin(0.5);
    std::bernoulli_distribution rare(0.2);
    auto pool_unit = [&](int i) { return std::polar(1.0, 2.0 * kPi * i / 6.0); };

    std::vector<SpectrumPoint> pts;
    const int n = count(rng);
    for (int k = 0; k < n; ++k) {
        const int i = pool_index(rng);
        const bool first = coin(rng);
        switch (model) {
            case SpectrumModel::Hyperbolic:
                if (first) {
                    pts.push_back(OrbitClassPoint{i / 5.0, pool_unit(i)});
                } else {
                    pts.push_back(BoundaryChar{i % 2 == 0 ? 1 : -1, pool_unit(i)});
                }
                break;
            case SpectrumModel::Parabolic:
                if (first) {
                    pts.push_back(ParabolicClassPoint{std::polar(0.15 * i, 1.0 + i)});
                } else {
                    pts.push_back(CharPoint{pool_unit(i)});
                }
                break;
            case SpectrumModel::EllipticIrrational:
                if (first) {
                    pts.push_back(FiberPoint{(i + 1) / 6.0});
                } else {
                    pts.push_back(CharPoint{pool_unit(i)});
                }
                break;
            case SpectrumModel::EllipticRational:
                pts.push_back(TorusPoint{i / 5.0, pool_unit(i), pool_unit(5 - i)});
                break;
        }
    }
    SpectrumFlags f;
    if (model == SpectrumModel::Hyperbolic) f.all_boundary_chars = rare(rng);
    if (model == SpectrumModel::Parabolic || model == SpectrumModel::EllipticIrrational) f.all_chars = rare(rng);
    if (model == SpectrumModel::EllipticIrrational) f.fibers_accumulate_at_zero = rare(rng);
    return SpectrumSet(model, std::move(pts), f);
}

ClosureAxiomsReport closure_axioms_check(SpectrumModel model, const std::vector<SpectrumSet>& sets) {
    ClosureAxiomsReport r;
    r.model = model;
    r.samples = static_cast<int>(sets.size());
    const SpectrumSet empty(model);
    r.empty_preserved = closure(empty) == empty && closure(empty).empty();
    for (std::size_t i = 0; i < sets.size(); ++i) {
        const SpectrumSet& a = sets[i];
        const SpectrumSet& b = sets[(i + 1) % sets.size()];
        const SpectrumSet ca = closure(a);
        if (!(closure(ca) == ca)) ++r.idempotent_failures;
        if (!is_subset(a, ca)) ++r.extensive_failures;
        const SpectrumSet ab = set_union(a, b);
        if (!is_subset(ca, closure(ab))) ++r.monotone_failures;
        if (!(closure(ab) == set_union(ca, closure(b)))) ++r.union_failures;
    }
    return r;
}

ClosureAxiomsReport closure_axioms_check(SpectrumModel model, int samples, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<SpectrumSet> sets;
    sets.reserve(static_cast<std::size_t>(std::max(0, samples)));
    for (int i = 0; i < samples; ++i) sets.push_back(random_spectrum_set(model, rng));
    return closure_axioms_check(model, sets);
}

OrbitClassPoint orbit_class_coordinates(const DiskAutomorphism& phi, Complex x) {
    const double m = hyperbolic_factor(phi);
    if (!(std::abs(x) <= 1.0 + kDiskSlack)) throw DomainError("orbit_class_coordinates: x outside the disk");
    if (std::abs(x - 1.0) < 1e-12 || std::abs(x + 1.0) < 1e-12) {
        throw DomainError("orbit_class_coordinates: x is a fixed point");
    }
    const Complex c = halfplane_coordinate(phi, x);
    const double u = std::clamp(0.5 - std::arg(c) / kPi, 0.0, 1.0);
    const double ratio = (std::log(std::abs(1.0 + x)) - std::log(std::abs(1.0 - x))) / std::log(m);
    double frac = ratio - std::floor(ratio);
    if (frac >= 1.0) frac = 0.0;
    return {u, std::polar(1.0, 2.0 * kPi * frac)};
}

}  // namespace diskcp
