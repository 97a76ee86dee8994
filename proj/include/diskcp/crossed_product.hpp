#pragma once

// Finitely supported elements sum_n f_n U^n of C(D) x_phi Z with the
// twisted product fU^m . gU^n = f (g o phi^-m) U^{m+n}.

#include <cstdint>
#include <map>

#include "diskcp/expr.hpp"

namespace diskcp {

class CrossedElement {
public:
    using Coefficients = std::map<std::int64_t, ExprFun>;

    /// The zero element (empty support).
    CrossedElement() = default;
    explicit CrossedElement(Coefficients coeffs);

    static CrossedElement unit();
    /// The coordinate function z as a degree-0 element.
    static CrossedElement generator_a();
    /// The implementing unitary U.
    static CrossedElement generator_u();
    /// f U^n.
    static CrossedElement monomial(ExprFun f, std::int64_t n);
    static CrossedElement embed(ExprFun f) { return monomial(std::move(f), 0); }

    const Coefficients& coefficients() const { return coeffs_; }
    /// f_n, or the zero function off the support.
    ExprFun coefficient(std::int64_t n) const;
    bool is_zero() const { return coeffs_.empty(); }
    std::int64_t min_degree() const;
    std::int64_t max_degree() const;
    /// max |n| over the support (0 for the zero element).
    std::int64_t support_radius() const;

    friend CrossedElement operator+(const CrossedElement& a, const CrossedElement& b);
    friend CrossedElement operator-(const CrossedElement& a, const CrossedElement& b);
    friend CrossedElement operator*(Complex s, const CrossedElement& a);

private:
    void add_term(std::int64_t n, const ExprFun& f);
    Coefficients coeffs_;
};

CrossedElement multiply(const CrossedElement& a, const CrossedElement& b, const DiskAutomorphism& phi);
/// (f U^n)* = (conj(f) o phi^n) U^-n.
CrossedElement adjoint(const CrossedElement& a, const DiskAutomorphism& phi);
/// Gauge action: f_n -> lambda^n f_n. DomainError unless |lambda| = 1 within 1e-12.
CrossedElement gauge_act(Complex lambda, const CrossedElement& a);
/// Conditional expectation onto degree n: returns f_n exactly.
ExprFun expectation(std::int64_t n, const CrossedElement& a);
/// Fejer mean sum_{|n| <= k} (1 - |n|/(k+1)) f_n U^n. DomainError if k < 0.
CrossedElement fejer(std::int64_t k, const CrossedElement& a);
double fejer_weight(std::int64_t k, std::int64_t n);

/// Coefficientwise sample distance over the union of supports.
double sup_distance(const CrossedElement& a, const CrossedElement& b);
bool approx_equal(const CrossedElement& a, const CrossedElement& b, double tol = kExprTolerance);

}  // namespace diskcp
