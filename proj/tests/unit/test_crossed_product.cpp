#include "doctest.h"

#include <random>

#include "diskcp/crossed_product.hpp"
#include "diskcp/errors.hpp"
#include "diskcp/operator_models.hpp"
#include "oracles.hpp"

using namespace diskcp;

namespace {

const DiskAutomorphism kPhi = DiskAutomorphism::hyperbolic_normal_form(0.5);
const Complex kX(0.1, 0.2);
constexpr std::int64_t kN = 40;

Eigen::MatrixXcd pi_x(const CrossedElement& a) { return represent(a, kPhi, HyperbolicOrbit{kX}, kN).matrix; }

double interior_gap(const Eigen::MatrixXcd& lhs, const Eigen::MatrixXcd& rhs, std::int64_t margin) {
    return max_abs(interior_block(lhs - rhs, kN, margin));
}

}  // namespace

TEST_CASE("expression trees") {
    const ExprFun z = ExprFun::z();
    const ExprFun f = z * z + ExprFun::constant({2.0, 1.0}) * ExprFun::conj_z();
    const Complex w(0.3, -0.4);
    CHECK(std::abs(f(w) - (w * w + Complex(2.0, 1.0) * std::conj(w))) < 1e-15);
    CHECK(std::abs(f.conjugate()(w) - std::conj(f(w))) < 1e-15);
    const MoebiusWord psi(DiskAutomorphism(0.2, Complex(0.1, 0.3)));
    CHECK(std::abs(f.precompose(psi)(w) - f(psi(w))) < 1e-15);
    const ExprFun nested = f.precompose(psi).precompose(psi);
    CHECK(nested.kind() == ExprKind::Precompose);
    CHECK(nested.inner().kind() != ExprKind::Precompose);
    CHECK(std::abs(nested(w) - f(psi(psi(w)))) < 1e-14);
    CHECK(ExprFun::constant(3.0).precompose(psi).is_const());
    CHECK(to_string(z + ExprFun::constant(1.0)).find("add") != std::string::npos);
    CHECK(expr_samples().size() == 64);
}

TEST_CASE("multiply examples") {
    const CrossedElement A = CrossedElement::generator_a();
    const CrossedElement U = CrossedElement::generator_u();
    const CrossedElement ua = multiply(U, A, kPhi);
    REQUIRE(ua.coefficients().size() == 1);
    REQUIRE(ua.coefficients().begin()->first == 1);
    const Complex w(0.2, 0.1);
    CHECK(std::abs(ua.coefficient(1)(w) - kPhi.inverse()(w)) < 1e-15);

    const CrossedElement uau = multiply(adjoint(U, kPhi), multiply(A, U, kPhi), kPhi);
    CHECK(approx_equal(uau, CrossedElement::embed(ExprFun::z().precompose(MoebiusWord(kPhi)))));

    std::mt19937_64 rng(5);
    const CrossedElement a = oracle::random_element(rng, 3, 3);
    CHECK(approx_equal(multiply(a, CrossedElement::unit(), kPhi), a));
    CHECK(approx_equal(multiply(CrossedElement::unit(), a, kPhi), a));
}

TEST_CASE("adjoint examples") {
    const CrossedElement U = CrossedElement::generator_u();
    const CrossedElement A = CrossedElement::generator_a();
    const CrossedElement us = adjoint(U, kPhi);
    REQUIRE(us.coefficients().size() == 1);
    CHECK(us.coefficients().begin()->first == -1);
    CHECK(us.coefficient(-1).is_const());
    CHECK(approx_equal(adjoint(A, kPhi), CrossedElement::embed(ExprFun::conj_z())));
    const CrossedElement au = multiply(A, U, kPhi);
    CHECK(approx_equal(adjoint(au, kPhi), multiply(adjoint(U, kPhi), adjoint(A, kPhi), kPhi)));
}

TEST_CASE("*-algebra identities under truncation") {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 40; ++i) {
        const CrossedElement a = oracle::random_element(rng, 2, 2);
        const CrossedElement b = oracle::random_element(rng, 2, 2);
        const CrossedElement c = oracle::random_element(rng, 2, 2);
        const CrossedElement ab = multiply(a, b, kPhi);
        CHECK(approx_equal(multiply(ab, c, kPhi), multiply(a, multiply(b, c, kPhi), kPhi), 1e-9));
        CHECK(approx_equal(adjoint(adjoint(a, kPhi), kPhi), a, 1e-12));
        CHECK(approx_equal(adjoint(ab, kPhi), multiply(adjoint(b, kPhi), adjoint(a, kPhi), kPhi), 1e-9));
        CHECK(approx_equal(multiply(a, b + c, kPhi), ab + multiply(a, c, kPhi), 1e-12));

        CHECK(interior_gap(pi_x(ab), pi_x(a) * pi_x(b), 4) < 1e-10);
        CHECK(interior_gap(pi_x(adjoint(a, kPhi)), pi_x(a).adjoint(), 2) < 1e-10);
    }
}

TEST_CASE("covariance at coefficient level") {
    std::mt19937_64 rng(3);
    const CrossedElement U = CrossedElement::generator_u();
    for (int i = 0; i < 20; ++i) {
        const ExprFun f = oracle::random_expr(rng, 3);
        const CrossedElement lhs = multiply(adjoint(U, kPhi), multiply(CrossedElement::embed(f), U, kPhi), kPhi);
        CHECK(approx_equal(lhs, CrossedElement::embed(f.precompose(MoebiusWord(kPhi)))));
    }
}

TEST_CASE("gauge action") {
    std::mt19937_64 rng(12);
    const CrossedElement a = oracle::random_element(rng, 3, 2);
    CHECK(approx_equal(gauge_act(1.0, a), a));
    const Complex l = std::polar(1.0, 0.7);
    const CrossedElement U = CrossedElement::generator_u();
    CHECK(approx_equal(gauge_act(l, U), l * U));
    const CrossedElement au2 = multiply(CrossedElement::generator_a(), multiply(U, U, kPhi), kPhi);
    CHECK(approx_equal(gauge_act(-1.0, au2), au2));
    const Complex m = std::polar(1.0, -2.1);
    CHECK(approx_equal(gauge_act(l * m, a), gauge_act(l, gauge_act(m, a)), 1e-12));
    const CrossedElement b = oracle::random_element(rng, 2, 2);
    CHECK(approx_equal(gauge_act(l, multiply(a, b, kPhi)), multiply(gauge_act(l, a), gauge_act(l, b), kPhi), 1e-9));
    CHECK(approx_equal(gauge_act(l, adjoint(a, kPhi)), adjoint(gauge_act(l, a), kPhi), 1e-12));
    CHECK(std::abs(operator_norm(pi_x(gauge_act(l, a))) - operator_norm(pi_x(a))) < 1e-9);
    CHECK_THROWS_AS(gauge_act(1.1, a), DomainError);
}

TEST_CASE("conditional expectation") {
    CHECK(approx_equal(expectation(0, CrossedElement::unit()), ExprFun::constant(1.0)));
    const CrossedElement e = CrossedElement::generator_a() + Complex(3.0) * CrossedElement::generator_u();
    CHECK(approx_equal(expectation(1, e), ExprFun::constant(3.0)));

    // 256-point trapezoid rule of the gauge average of pi_x(alpha_l(a U^-n)).
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 5; ++trial) {
        const CrossedElement a = oracle::random_element(rng, 3, 2);
        for (std::int64_t n = -3; n <= 3; ++n) {
            const CrossedElement shifted = multiply(a, CrossedElement::monomial(ExprFun::constant(1.0), -n), kPhi);
            Eigen::MatrixXcd avg = Eigen::MatrixXcd::Zero(2 * kN + 1, 2 * kN + 1);
            for (int j = 0; j < 256; ++j) avg += pi_x(gauge_act(std::polar(1.0, 2.0 * kPi * j / 256.0), shifted));
            avg /= 256.0;
            const Eigen::MatrixXcd want = pi_x(CrossedElement::embed(expectation(n, a)));
            CHECK(max_abs(avg - want) < 1e-10);
        }
    }
}

TEST_CASE("expectation is positive on a a*") {
    std::mt19937_64 rng(8);
    for (int i = 0; i < 10; ++i) {
        const CrossedElement a = oracle::random_element(rng, 2, 2);
        const ExprFun e0 = expectation(0, multiply(a, adjoint(a, kPhi), kPhi));
        for (const Complex& z : disk_samples(48, 16)) {
            CHECK(e0(z).real() >= -1e-12);
            CHECK(std::abs(e0(z).imag()) < 1e-12);
        }
    }
}

TEST_CASE("Fejer means") {
    CHECK(approx_equal(fejer(3, CrossedElement::unit()), CrossedElement::unit()));
    CHECK(approx_equal(fejer(1, CrossedElement::generator_u()), Complex(0.5) * CrossedElement::generator_u()));
    CHECK(fejer_weight(4, 2) == 1.0 - 2.0 / 5.0);
    CHECK(fejer_weight(4, -5) == 0.0);
    CHECK_THROWS_AS(fejer(-1, CrossedElement::unit()), DomainError);

    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 5; ++trial) {
        const CrossedElement a = oracle::random_element(rng, 5, 2);
        double prev = 1e300;
        for (std::int64_t k : {0, 1, 2, 4, 8, 16, 32, 64}) {
            const double d = operator_norm(pi_x(fejer(k, a)) - pi_x(a));
            CHECK(d <= prev + 1e-12);
            prev = d;
        }
    }
}
