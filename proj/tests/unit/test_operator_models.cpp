#include "doctest.h"

#include <random>

#include "diskcp/errors.hpp"
#include "diskcp/operator_models.hpp"
#include "oracles.hpp"

using namespace diskcp;

namespace {

const DiskAutomorphism kHyp = DiskAutomorphism::hyperbolic_normal_form(0.5);
const DiskAutomorphism kPar = DiskAutomorphism::parabolic_plus();

CrossedElement A() { return CrossedElement::generator_a(); }
CrossedElement U() { return CrossedElement::generator_u(); }

}  // namespace

TEST_CASE("represent: diagonal orbit, shift, character") {
    const TruncatedRep r = represent(A(), kHyp, HyperbolicOrbit{0.0}, 2);
    const double want[] = {-0.8, -0.5, 0.0, 0.5, 0.8};
    for (int i = 0; i < 5; ++i) CHECK(std::abs(r.matrix(i, i) - want[i]) < 1e-15);
    CHECK(max_abs(r.matrix - Eigen::MatrixXcd(r.matrix.diagonal().asDiagonal())) == 0.0);

    for (const RepKind& k : {RepKind(HyperbolicOrbit{0.1}), RepKind(ParabolicOrbit{0.1})}) {
        const DiskAutomorphism& phi = std::holds_alternative<HyperbolicOrbit>(k) ? kHyp : kPar;
        const Eigen::MatrixXcd s = represent(U(), phi, k, 1).matrix;
        Eigen::MatrixXcd expected = Eigen::MatrixXcd::Zero(3, 3);
        expected(1, 0) = 1.0;
        expected(2, 1) = 1.0;
        CHECK(max_abs(s - expected) == 0.0);
    }
    const TruncatedRep c = represent(A(), kHyp, Character{1.0, 0.0}, 5);
    CHECK(c.matrix.rows() == 1);
    CHECK(std::abs(c.matrix(0, 0) - 1.0) < 1e-15);
    const TruncatedRep cu = represent(U(), kHyp, Character{-1.0, 0.25}, 5);
    CHECK(std::abs(cu.matrix(0, 0) - Complex(0.0, 1.0)) < 1e-15);
}

TEST_CASE("represent: kind errors") {
    CHECK_THROWS_AS(represent(A(), kPar, HyperbolicOrbit{0.0}, 2), KindMismatch);
    CHECK_THROWS_AS(represent(A(), kHyp, ParabolicOrbit{0.0}, 2), KindMismatch);
    CHECK_THROWS_AS(represent(A(), kHyp, Character{0.0, 0.0}, 2), KindMismatch);
    CHECK_THROWS_AS(represent(A(), DiskAutomorphism::rotation(std::sqrt(2.0) - 1.0), EllipticRational{1, 3}, 0),
                    RationalityRequired);
    CHECK_THROWS_AS(represent(A(), DiskAutomorphism::rational(1, 3), EllipticRational{1, 4}, 0), RationalityRequired);
}

TEST_CASE("covariance residual") {
    CHECK(covariance_residual(kHyp, Complex(0.0, 0.2), 20) < 1e-13);
    CHECK(covariance_residual(kPar, 0.0, 20) < 1e-13);
    CHECK(covariance_residual(DiskAutomorphism::rotation(0.3), 0.5, 20) < 1e-13);
    for (auto [p, q] : {std::pair{1, 2}, {1, 3}, {2, 5}}) {
        const DiskAutomorphism rot = DiskAutomorphism::rational(p, q);
        const EllipticRational kind{p, q, std::polar(1.0, 0.4), std::polar(0.6, 1.1)};
        CHECK(covariance_residual(rot, kind, 0) < 1e-14);
    }
}

TEST_CASE("rational model relations by direct matrix products") {
    for (auto [p, q] : {std::pair{1, 2}, {1, 3}, {2, 5}}) {
        const DiskAutomorphism rot = DiskAutomorphism::rational(p, q);
        const EllipticRational kind{p, q, std::polar(1.0, 0.9), std::polar(0.8, -0.3)};
        const Eigen::MatrixXcd u = unitary_image(rot, kind, 0);
        const Eigen::MatrixXcd a = represent(A(), rot, kind, 0).matrix;
        const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(q, q);
        CHECK(max_abs(u.adjoint() * u - id) < 1e-15);
        CHECK(max_abs(u * u.adjoint() - id) < 1e-15);
        CHECK(max_abs(a * a.adjoint() - a.adjoint() * a) < 1e-15);
        CHECK(max_abs(u.adjoint() * a * u - rot.lambda() * a) < 1e-14);
        CHECK(a.rows() == q);
    }
}

TEST_CASE("homomorphism at truncation and orbit shift equivalence") {
    std::mt19937_64 rng(10);
    const Complex x(0.2, -0.3);
    const std::int64_t N = 30;
    for (int i = 0; i < 20; ++i) {
        const CrossedElement a = oracle::random_element(rng, 2, 2);
        const CrossedElement b = oracle::random_element(rng, 2, 2);
        const Eigen::MatrixXcd lhs = represent(multiply(a, b, kHyp), kHyp, HyperbolicOrbit{x}, N).matrix;
        const Eigen::MatrixXcd rhs = represent(a, kHyp, HyperbolicOrbit{x}, N).matrix *
                                     represent(b, kHyp, HyperbolicOrbit{x}, N).matrix;
        CHECK(max_abs(interior_block(lhs - rhs, N, 4)) < 1e-10);

        const Eigen::MatrixXcd mx = represent(a, kHyp, HyperbolicOrbit{x}, N).matrix;
        const Eigen::MatrixXcd my = represent(a, kHyp, HyperbolicOrbit{kHyp(x)}, N).matrix;
        // Row k at phi(x) equals row k + 1 at x.
        const Eigen::Index n = mx.rows();
        CHECK(max_abs(my.block(0, 0, n - 1, n - 1) - mx.block(1, 1, n - 1, n - 1)) < 1e-12);
    }
}

TEST_CASE("symbols") {
    const SymbolPair sa = symbol(A(), kHyp);
    CHECK(distance(sa.minus, Laurent::monomial(-1.0, 0)) < 1e-15);
    CHECK(distance(sa.plus, Laurent::monomial(1.0, 0)) < 1e-15);
    const SymbolPair su = symbol(U(), kHyp);
    CHECK(distance(su.minus, Laurent::monomial(1.0, -1)) < 1e-15);
    CHECK(distance(su.plus, Laurent::monomial(1.0, 1)) < 1e-15);
    CHECK_THROWS_AS(symbol(A(), kPar), KindMismatch);

    std::mt19937_64 rng(6);
    for (int i = 0; i < 30; ++i) {
        const CrossedElement a = oracle::random_element(rng, 3, 2);
        const CrossedElement b = oracle::random_element(rng, 3, 2);
        // Laurent product of independently evaluated coefficient lists.
        std::map<std::int64_t, Complex> pa, pb, prod;
        for (const auto& [n, f] : a.coefficients()) pa[n] = f(1.0);
        for (const auto& [n, f] : b.coefficients()) pb[n] = f(1.0);
        for (const auto& [m, x] : pa) {
            for (const auto& [n, y] : pb) prod[m + n] += x * y;
        }
        const SymbolPair sab = symbol(multiply(a, b, kHyp), kHyp);
        for (const auto& [n, c] : prod) CHECK(std::abs(sab.plus.coefficient(n) - c) < 1e-10);
        CHECK(distance(sab, symbol_product(symbol(a, kHyp), symbol(b, kHyp))) < 1e-10);
        CHECK(distance(symbol(adjoint(a, kHyp), kHyp), symbol_adjoint(symbol(a, kHyp))) < 1e-10);
    }
}

TEST_CASE("symbols read off two different orbits") {
    std::mt19937_64 rng(61);
    for (int i = 0; i < 10; ++i) {
        const CrossedElement a = oracle::random_element(rng, 2, 2);
        const SymbolPair s1 = estimate_symbol(represent(a, kHyp, HyperbolicOrbit{Complex(0.0, 0.3)}, 60), 2);
        const SymbolPair s2 = estimate_symbol(represent(a, kHyp, HyperbolicOrbit{Complex(0.4, -0.5)}, 60), 2);
        CHECK(distance(s1, s2) < 1e-10);
        CHECK(distance(s1, symbol(a, kHyp)) < 1e-10);
    }
}

TEST_CASE("block decomposition") {
    const TruncatedRep ru = represent(U(), kHyp, HyperbolicOrbit{0.0}, 10);
    const BlockDecomposition bu = block_decompose(ru, U());
    CHECK(max_abs(bu.assembly + bu.compact_residual - ru.matrix) == 0.0);
    // Only the corner e_{-1} -> e_0 remains.
    int nonzero = 0;
    for (Eigen::Index i = 0; i < bu.compact_residual.rows(); ++i) {
        for (Eigen::Index j = 0; j < bu.compact_residual.cols(); ++j) nonzero += bu.compact_residual(i, j) != Complex{} ? 1 : 0;
    }
    CHECK(nonzero == 1);
    CHECK(std::abs(bu.compact_residual(ru.row_of(0), ru.row_of(-1)) - 1.0) < 1e-15);
    CHECK(bu.residual_tail_norm(2) == 0.0);

    const TruncatedRep r1 = represent(CrossedElement::unit(), kHyp, HyperbolicOrbit{0.0}, 10);
    CHECK(max_abs(block_decompose(r1, CrossedElement::unit()).compact_residual) == 0.0);

    const double a = 0.5;
    const TruncatedRep ra = represent(A(), kHyp, HyperbolicOrbit{Complex(0.0, 0.2)}, 60);
    const BlockDecomposition ba = block_decompose(ra, A());
    const double multiplier = (1.0 - a) / (1.0 + a);
    double prev = ba.residual_tail_norm(2);
    for (std::int64_t m : {4, 8, 16}) {
        const double t = ba.residual_tail_norm(m);
        CHECK(t <= 0.5 * prev);
        prev = t;
    }
    const double ratio = std::pow(ba.residual_tail_norm(12) / ba.residual_tail_norm(6), 1.0 / 6.0);
    CHECK(std::abs(ratio - multiplier) < 0.2 * multiplier);
    CHECK_THROWS_AS(block_decompose(represent(A(), kPar, ParabolicOrbit{0.0}, 4), A()), KindMismatch);
}

TEST_CASE("parabolic structure") {
    const TruncatedRep ra = represent(A(), kPar, ParabolicOrbit{0.0}, 80);
    const ParabolicStructure pa = parabolic_structure_residual(ra, A());
    CHECK(distance(pa.laurent, Laurent::monomial(1.0, 0)) < 1e-12);
    for (std::int64_t k = -80; k <= 80; ++k) {
        const Eigen::Index i = ra.row_of(k);
        CHECK(std::abs(pa.compact_residual(i, i) - (ra.matrix(i, i) - 1.0)) < 1e-15);
    }
    const TruncatedRep ru = represent(U(), kPar, ParabolicOrbit{0.0}, 20);
    const ParabolicStructure pu = parabolic_structure_residual(ru, U());
    CHECK(distance(pu.laurent, Laurent::monomial(1.0, 1)) < 1e-15);
    CHECK(max_abs(pu.compact_residual) == 0.0);

    std::mt19937_64 rng(15);
    for (int i = 0; i < 5; ++i) {
        const CrossedElement a = oracle::random_element(rng, 3, 2);
        const auto t = parabolic_structure_residual(represent(a, kPar, ParabolicOrbit{0.2}, 100), a).tail_norms({20, 60});
        CHECK(t[1] < t[0]);
    }
}

TEST_CASE("elliptic field check") {
    const DiskAutomorphism rot = DiskAutomorphism::rotation(std::sqrt(2.0) - 1.0);
    const auto ra = elliptic_field_check(A(), rot, {0.0, 0.5, 1.0});
    CHECK(ra.v_content_at_zero < 1e-12);
    CHECK(std::abs(ra.scalar_part.coefficient(0)) < 1e-15);
    CHECK(ra.relation_residual < 1e-13);

    const auto ru = elliptic_field_check(U(), rot, {0.0, 0.3, 0.7, 1.0});
    CHECK(ru.variation_in_t < 1e-14);

    const auto rq = elliptic_field_check(A(), DiskAutomorphism::rational(1, 3), {0.0, 1.0});
    CHECK(rq.rational_model);
    CHECK(rq.relation_residual < 1e-15);

    std::mt19937_64 rng(19);
    for (int i = 0; i < 10; ++i) {
        const auto r = elliptic_field_check(oracle::random_element(rng, 2, 3), rot, {0.0, 0.5});
        CHECK(r.v_content_at_zero < 1e-12);
    }
}

TEST_CASE("truncated norms") {
    const auto nu = truncated_norm(U(), kHyp, HyperbolicOrbit{0.3}, {5, 10, 20});
    for (double n : nu) CHECK(n == doctest::Approx(1.0).epsilon(1e-12));
    const Complex x(0.1, 0.2);
    const auto na = truncated_norm(A(), kHyp, HyperbolicOrbit{x}, {5, 10, 20, 40});
    for (std::size_t i = 1; i < na.size(); ++i) CHECK(na[i] >= na[i - 1] - 1e-9);
    CHECK(na.back() > 0.999);

    const CrossedElement herm = A() + adjoint(A(), kHyp);
    const auto pts = orbit(kHyp, x, -10, 10);
    double expected = 0.0;
    for (const Complex& p : pts) expected = std::max(expected, 2.0 * std::abs(p.real()));
    CHECK(truncated_norm(herm, kHyp, HyperbolicOrbit{x}, {10})[0] == doctest::Approx(expected).epsilon(1e-12));

    std::mt19937_64 rng(3);
    for (int i = 0; i < 5; ++i) {
        const CrossedElement a = oracle::random_element(rng, 3, 2);
        const auto ns = truncated_norm(a, kPar, ParabolicOrbit{0.1}, {5, 10, 20, 40});
        for (std::size_t k = 1; k < ns.size(); ++k) CHECK(ns[k] >= ns[k - 1] - 1e-9);
    }
}

TEST_CASE("truncated spectrum") {
    const auto s = truncated_spectrum(represent(A(), kHyp, HyperbolicOrbit{0.0}, 2));
    const double want[] = {-0.8, -0.5, 0.0, 0.5, 0.8};
    for (int i = 0; i < 5; ++i) CHECK(std::abs(s[i] - want[i]) < 1e-15);
    CHECK(truncated_spectrum(represent(A(), kHyp, Character{-1.0, 0.1}, 0)).size() == 1);
    CHECK_THROWS_AS(truncated_spectrum(represent(U(), kHyp, HyperbolicOrbit{0.0}, 2)), KindMismatch);

    const Complex x(0.0, 0.3);
    double prev = 1e300;
    for (std::int64_t n : {25, 50, 100}) {
        const double d = hausdorff_distance(truncated_spectrum(represent(A(), kHyp, HyperbolicOrbit{x}, n)),
                                            orbit_closure(kHyp, x));
        CHECK(d <= prev);
        prev = d;
    }
    CHECK(prev < 1e-3);
}
