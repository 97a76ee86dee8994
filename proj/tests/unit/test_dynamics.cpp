#include "doctest.h"

#include <random>

#include "diskcp/dynamics.hpp"
#include "diskcp/errors.hpp"
#include "oracles.hpp"

using namespace diskcp;

namespace {

/// Closed-form conjugacy between z -> (z + a)/(1 + a z) and (z + b)/(1 + b z):
/// in c = (1 + z)/(1 - z), r e^{i t} -> r^k e^{i t} with k = log m_b / log m_a.
Complex power_map_conjugacy(double a, double b, Complex z) {
    const double ma = (1.0 + a) / (1.0 - a);
    const double mb = (1.0 + b) / (1.0 - b);
    const Complex c = (1.0 + z) / (1.0 - z);
    const Complex w = std::polar(std::pow(std::abs(c), std::log(mb) / std::log(ma)), std::arg(c));
    return (w - 1.0) / (w + 1.0);
}

}  // namespace

TEST_CASE("orbit examples") {
    const DiskAutomorphism h = DiskAutomorphism::hyperbolic_normal_form(0.5);
    const auto o = orbit(h, 0.0, 0, 3);
    REQUIRE(o.size() == 4);
    CHECK(std::abs(o[1] - 0.5) < 1e-15);
    CHECK(std::abs(o[2] - 0.8) < 1e-15);
    CHECK(std::abs(o[3] - 13.0 / 14.0) < 1e-15);
    const auto back = orbit(h, 0.0, -2, 0);
    CHECK(std::abs(back[0] + 0.8) < 1e-15);
    CHECK(std::abs(back[1] + 0.5) < 1e-15);

    const auto id = orbit(DiskAutomorphism(), Complex(0.2, 0.3), -3, 3);
    for (const Complex& z : id) CHECK(z == Complex(0.2, 0.3));

    const auto cyc = orbit(DiskAutomorphism::rational(1, 4), 0.5, 0, 4);
    CHECK(std::abs(cyc[4] - 0.5) < 1e-15);
    CHECK_THROWS_AS(orbit(h, 1.5, 0, 1), DomainError);
}

TEST_CASE("orbit closure") {
    const DiskAutomorphism h = DiskAutomorphism::hyperbolic_normal_form(0.5);
    const auto c = orbit_closure(h, Complex(0.0, 0.3));
    CHECK(c.kind == LimitKind::FixedPair);
    REQUIRE(c.limit_points.size() == 2);
    Complex z(0.0, 0.3);
    int steps = 0;
    while (std::abs(z - 1.0) >= 1e-6 && steps < 200) {
        z = h(z);
        ++steps;
    }
    CHECK(steps < 200);
    for (const Complex& p : c.limit_points) CHECK(std::abs(h(p) - p) < 1e-9);

    const auto p = orbit_closure(DiskAutomorphism::parabolic_plus(), 0.0);
    CHECK(p.kind == LimitKind::FixedPoint);
    REQUIRE(p.limit_points.size() == 1);
    CHECK(std::abs(p.limit_points[0] - 1.0) < 1e-12);

    const auto r = orbit_closure(DiskAutomorphism::rotation(1.0 / 3.0), 0.4);
    CHECK(r.kind == LimitKind::Cycle);
    REQUIRE(r.limit_points.size() == 3);
    for (int k = 0; k < 3; ++k) {
        const Complex want = std::polar(0.4, 2.0 * kPi * k / 3.0);
        double best = 1.0;
        for (const Complex& q : r.limit_points) best = std::min(best, std::abs(q - want));
        CHECK(best < 1e-12);
    }

    const DiskAutomorphism e(std::sqrt(2.0) - 1.0, Complex(0.2, 0.1));
    const auto circ = orbit_closure(e, 0.5);
    CHECK(circ.kind == LimitKind::Circle);
    for (const Complex& s : circ.sample_orbit) CHECK(std::abs(std::abs(s - circ.circle_center) - circ.circle_radius) < 1e-9);

    const auto fixed = orbit_closure(h, 1.0);
    CHECK(fixed.kind == LimitKind::Singleton);

    OrbitClosureOptions opts;
    opts.force_rational = false;
    CHECK(orbit_closure(DiskAutomorphism::rotation(0.25), 0.5, opts).kind == LimitKind::Circle);
}

TEST_CASE("half-plane coordinates") {
    const DiskAutomorphism h = DiskAutomorphism::hyperbolic_normal_form(0.5);
    CHECK(std::abs(halfplane_coordinate(h, 0.0) - 1.0) < 1e-15);
    CHECK(std::abs(halfplane_coordinate(h, 0.5) - 3.0) < 1e-15);
    CHECK(hyperbolic_factor(h) == doctest::Approx(3.0));
    for (double t = -0.9; t < 0.95; t += 0.1) CHECK(std::abs(std::abs(halfplane_coordinate(h, Complex(0.0, t))) - 1.0) < 1e-15);
    CHECK_THROWS_AS(halfplane_coordinate(h, 1.0), DomainError);

    const DiskAutomorphism p = DiskAutomorphism::parabolic_plus();
    const double beta = parabolic_translation(p);
    CHECK(std::abs(halfplane_coordinate(p, p(0.0)) - halfplane_coordinate(p, 0.0) - beta) < 1e-12);
    std::mt19937_64 rng(1);
    for (int i = 0; i < 100; ++i) {
        const Complex z = oracle::random_disk_point(rng, 0.9);
        CHECK(std::abs(halfplane_coordinate(p, p(z)) - halfplane_coordinate(p, z) - beta) < 1e-9);
        CHECK(std::abs(halfplane_coordinate_inverse(p, halfplane_coordinate(p, z)) - z) < 1e-12);
    }
}

TEST_CASE("fundamental domain examples") {
    const DiskAutomorphism h = DiskAutomorphism::hyperbolic_normal_form(0.5);
    CHECK(fundamental_domain_contains(h, 0.0));
    const auto c0 = canonical_point(h, 0.0);
    CHECK(std::abs(c0.representative) < 1e-15);
    CHECK(c0.index == 0);
    CHECK_FALSE(fundamental_domain_contains(h, 0.5));
    const auto c1 = canonical_point(h, 0.5);
    CHECK(std::abs(c1.representative) < 1e-12);
    CHECK(c1.index == 1);
    CHECK_THROWS_AS(canonical_point(h, -1.0), DomainError);
}

TEST_CASE("fundamental domain meets each orbit once") {
    std::mt19937_64 rng(17);
    for (double a : {0.2, 0.5, 0.8}) {
        const DiskAutomorphism h = DiskAutomorphism::hyperbolic_normal_form(a);
        for (int i = 0; i < 100; ++i) {
            const Complex z = oracle::random_disk_point(rng, 0.97);
            int hits = 0;
            for (std::int64_t n = -25; n <= 25; ++n) {
                const Complex w = apply_power(h, n, z);
                if (std::abs(w) < 1.0 - 1e-12) hits += fundamental_domain_contains(h, w) ? 1 : 0;
            }
            CHECK(hits == 1);
            const auto cp = canonical_point(h, z);
            CHECK(fundamental_domain_contains(h, cp.representative));
            CHECK(std::abs(apply_power(h, cp.index, cp.representative) - z) < 1e-9);
        }
    }
}

TEST_CASE("printed domain predicate differs from the orbit domain") {
    const DiskAutomorphism h = DiskAutomorphism::hyperbolic_normal_form(0.5);
    // The printed region contains whole stretches of some orbits.
    int multi = 0;
    std::mt19937_64 rng(2);
    for (int i = 0; i < 200; ++i) {
        const Complex z = oracle::random_disk_point(rng, 0.97);
        int hits = 0;
        for (std::int64_t n = -25; n <= 25; ++n) hits += printed_domain_contains(h, apply_power(h, n, z)) ? 1 : 0;
        if (hits != 1) ++multi;
    }
    CHECK(multi > 0);
}

TEST_CASE("invariant circles") {
    const InvariantCircle line = invariant_circle(Complex(0.3, 0.0));
    CHECK(line.is_line);
    const Complex z(0.2, 0.4);
    const InvariantCircle c = invariant_circle(z);
    CHECK_FALSE(c.is_line);
    const Complex center(0.0, c.k);
    for (const Complex& p : {Complex(1.0, 0.0), Complex(-1.0, 0.0), z, Complex(0.0, c.crossing)}) {
        CHECK(std::abs(std::abs(p - center) - c.radius) < 1e-12);
    }
    const DiskAutomorphism h = DiskAutomorphism::hyperbolic_normal_form(0.4);
    const InvariantCircle ch = invariant_circle(h(z));
    CHECK(ch.k == doctest::Approx(c.k).epsilon(1e-12));
}

TEST_CASE("arc-length conjugacy") {
    const DiskAutomorphism phi = DiskAutomorphism::hyperbolic_normal_form(1.0 / 3.0);
    const DiskAutomorphism psi = DiskAutomorphism::hyperbolic_normal_form(2.0 / 3.0);
    const HyperbolicConjugacy mu(phi, psi);
    const HyperbolicConjugacy back = mu.reversed();
    std::mt19937_64 rng(42);
    std::vector<Complex> pts;
    for (int i = 0; i < 200; ++i) pts.push_back(oracle::random_disk_point(rng, 0.95));
    CHECK(mu.equivariance_residual(pts) < 1e-8);
    for (const Complex& z : pts) CHECK(std::abs(back(mu(z)) - z) < 1e-7);
    CHECK(std::abs(mu(1.0) - 1.0) < 1e-15);
    CHECK(std::abs(mu(-1.0) + 1.0) < 1e-15);

    // Identity when both maps agree.
    const HyperbolicConjugacy same(phi, phi);
    for (const Complex& z : pts) CHECK(std::abs(same(z) - z) < 1e-9);

    // The power-map oracle conjugates as well, and agrees with mu on the imaginary diameter.
    for (const Complex& z : pts) {
        CHECK(std::abs(power_map_conjugacy(1.0 / 3.0, 2.0 / 3.0, phi(z)) - psi(power_map_conjugacy(1.0 / 3.0, 2.0 / 3.0, z))) < 1e-9);
    }
    for (double t = -0.95; t < 0.96; t += 0.05) {
        const Complex z(0.0, t);
        CHECK(std::abs(mu(z) - power_map_conjugacy(1.0 / 3.0, 2.0 / 3.0, z)) < 1e-9);
    }

    // Continuity across phi(L).
    for (double t = -0.9; t < 0.91; t += 0.1) {
        const Complex edge = phi(Complex(0.0, t));
        const Complex inward = edge * (1.0 - 1e-9);
        const Complex outward = edge * (1.0 + 1e-9);
        if (std::abs(outward) < 1.0) CHECK(std::abs(mu(inward) - mu(outward)) < 1e-6);
    }
}

TEST_CASE("rational detection") {
    const auto r = detect_rational(2.0 / 7.0, 1000000, 1e-12);
    REQUIRE(r.has_value());
    CHECK(r->p == 2);
    CHECK(r->q == 7);
    CHECK_FALSE(detect_rational(std::sqrt(2.0) - 1.0, 1000000, 1e-12).has_value());
}
