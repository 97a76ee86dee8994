#pragma once

// Finite descriptions of closed sets in the primitive-ideal spaces of the
// four crossed-product families, and their closure operators. Infinite
// closed pieces (the boundary character circles, the full character circle)
// are flags, never enumerated.

#include <cstdint>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "diskcp/moebius.hpp"

namespace diskcp {

enum class SpectrumModel { Hyperbolic, Parabolic, EllipticIrrational, EllipticRational };

std::string to_string(SpectrumModel model);
/// ParseError on an unknown name.
SpectrumModel parse_spectrum_model(const std::string& name);

/// Hyperbolic orbit class in cylinder coordinates.
struct OrbitClassPoint {
    double u = 0.5;
    Complex omega{1.0, 0.0};
};
/// Hyperbolic character at the fixed point epsilon = -1 or +1.
struct BoundaryChar {
    int epsilon = 1;
    Complex omega{1.0, 0.0};
};
/// Parabolic orbit class, labelled by a point of the disk other than 1.
struct ParabolicClassPoint {
    Complex point{};
};
/// Character on T (parabolic and elliptic-irrational models).
struct CharPoint {
    Complex omega{1.0, 0.0};
};
/// Elliptic-irrational fibre over the circle of radius r; atomic.
struct FiberPoint {
    double r = 1.0;
};
/// Elliptic-rational solid torus point.
struct TorusPoint {
    double t = 0.0;
    Complex alpha{1.0, 0.0};
    Complex beta{1.0, 0.0};
};

using SpectrumPoint =
    std::variant<OrbitClassPoint, BoundaryChar, ParabolicClassPoint, CharPoint, FiberPoint, TorusPoint>;

std::string point_kind_name(const SpectrumPoint& p);

struct SpectrumFlags {
    /// Hyperbolic: both circles T x {-1, 1}.
    bool all_boundary_chars = false;
    /// Parabolic and elliptic-irrational: the whole circle of characters.
    bool all_chars = false;
    /// Elliptic-irrational: the listed fibres accumulate at r = 0.
    bool fibers_accumulate_at_zero = false;

    friend bool operator==(const SpectrumFlags&, const SpectrumFlags&) = default;
};

inline constexpr double kSpectrumTolerance = 1e-12;

class SpectrumSet {
public:
    explicit SpectrumSet(SpectrumModel model = SpectrumModel::Hyperbolic) : model_(model) {}
    /// DomainError if a point or flag does not belong to the model or leaves its range.
    SpectrumSet(SpectrumModel model, std::vector<SpectrumPoint> points, SpectrumFlags flags = {});

    SpectrumModel model() const { return model_; }
    const std::vector<SpectrumPoint>& points() const { return points_; }
    const SpectrumFlags& flags() const { return flags_; }
    bool empty() const;

    /// Sorted, deduplicated (within kSpectrumTolerance), points covered by a flag removed.
    SpectrumSet canonical() const;

    /// Whether the described set contains p.
    bool contains(const SpectrumPoint& p) const;

    friend bool operator==(const SpectrumSet& a, const SpectrumSet& b);

private:
    SpectrumModel model_;
    std::vector<SpectrumPoint> points_;
    SpectrumFlags flags_;
};

SpectrumSet closure(const SpectrumSet& s);
bool is_closed(const SpectrumSet& s);
/// DomainError on a model mismatch.
SpectrumSet set_union(const SpectrumSet& a, const SpectrumSet& b);
bool is_subset(const SpectrumSet& a, const SpectrumSet& b);

/// Random finite description. Points are drawn from a small pool so that
/// repeats and overlaps occur.
SpectrumSet random_spectrum_set(SpectrumModel model, std::mt19937_64& rng, int max_points = 4);

struct ClosureAxiomsReport {
    SpectrumModel model = SpectrumModel::Hyperbolic;
    int samples = 0;
    int idempotent_failures = 0;
    int extensive_failures = 0;
    int monotone_failures = 0;
    int union_failures = 0;
    bool empty_preserved = true;

    bool passed() const {
        return idempotent_failures == 0 && extensive_failures == 0 && monotone_failures == 0 &&
               union_failures == 0 && empty_preserved;
    }
};

/// Kuratowski axioms over the given sets (pairs are taken cyclically).
ClosureAxiomsReport closure_axioms_check(SpectrumModel model, const std::vector<SpectrumSet>& sets);
ClosureAxiomsReport closure_axioms_check(SpectrumModel model, int samples, std::uint64_t seed);

/// Cylinder coordinates of the orbit class of x under z -> (z + a)/(1 + a z):
/// u = 1/2 - arg(c)/pi with c = (1 + x)/(1 - x), so u = 0 on the upper arc of
/// T, 1 on the lower arc and 1/2 on the real diameter; omega =
/// exp(2 i pi frac(ln|c| / ln m)). DomainError at +-1, ClassError unless phi
/// is a hyperbolic map fixing +-1.
OrbitClassPoint orbit_class_coordinates(const DiskAutomorphism& phi, Complex x);

}  // namespace diskcp
