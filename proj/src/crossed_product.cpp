#include "diskcp/crossed_product.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "diskcp/errors.hpp"

namespace diskcp {

CrossedElement::CrossedElement(Coefficients coeffs) {
    for (auto& [n, f] : coeffs) add_term(n, f);
}

void CrossedElement::add_term(std::int64_t n, const ExprFun& f) {
    if (f.is_const() && f.value() == Complex{}) return;
    auto it = coeffs_.find(n);
    if (it == coeffs_.end()) {
        coeffs_.emplace(n, f);
        return;
    }
    it->second = it->second + f;
    if (it->second.is_const() && it->second.value() == Complex{}) coeffs_.erase(it);
}

CrossedElement CrossedElement::unit() { return monomial(ExprFun::constant(1.0), 0); }
CrossedElement CrossedElement::generator_a() { return monomial(ExprFun::z(), 0); }
CrossedElement CrossedElement::generator_u() { return monomial(ExprFun::constant(1.0), 1); }

CrossedElement CrossedElement::monomial(ExprFun f, std::int64_t n) {
    CrossedElement out;
    out.add_term(n, f);
    return out;
}

ExprFun CrossedElement::coefficient(std::int64_t n) const {
    auto it = coeffs_.find(n);
    return it == coeffs_.end() ? ExprFun{} : it->second;
}

std::int64_t CrossedElement::min_degree() const { return coeffs_.empty() ? 0 : coeffs_.begin()->first; }
std::int64_t CrossedElement::max_degree() const { return coeffs_.empty() ? 0 : coeffs_.rbegin()->first; }

std::int64_t CrossedElement::support_radius() const {
    return std::max(std::abs(min_degree()), std::abs(max_degree()));
}

CrossedElement operator+(const CrossedElement& a, const CrossedElement& b) {
    CrossedElement out = a;
    for (const auto& [n, f] : b.coeffs_) out.add_term(n, f);
    return out;
}

CrossedElement operator*(Complex s, const CrossedElement& a) {
    CrossedElement out;
    if (s == Complex{}) return out;
    for (const auto& [n, f] : a.coeffs_) out.add_term(n, s * f);
    return out;
}

CrossedElement operator-(const CrossedElement& a, const CrossedElement& b) {
    return a + Complex{-1.0, 0.0} * b;
}

CrossedElement multiply(const CrossedElement& a, const CrossedElement& b, const DiskAutomorphism& phi) {
    CrossedElement::Coefficients acc;
    for (const auto& [m, f] : a.coefficients()) {
        const MoebiusWord shift(phi, -m);
        for (const auto& [n, g] : b.coefficients()) {
            const ExprFun term = f * g.precompose(shift);
            auto it = acc.find(m + n);
            if (it == acc.end()) {
                acc.emplace(m + n, term);
            } else {
                it->second = it->second + term;
            }
        }
    }
    return CrossedElement(std::move(acc));
}

CrossedElement adjoint(const CrossedElement& a, const DiskAutomorphism& phi) {
    CrossedElement::Coefficients out;
    for (const auto& [n, f] : a.coefficients()) {
        out.emplace(-n, f.conjugate().precompose(MoebiusWord(phi, n)));
    }
    return CrossedElement(std::move(out));
}

CrossedElement gauge_act(Complex lambda, const CrossedElement& a) {
    if (std::abs(std::abs(lambda) - 1.0) > 1e-12) throw DomainError("gauge_act: |lambda| must be 1");
    CrossedElement::Coefficients out;
    for (const auto& [n, f] : a.coefficients()) {
        out.emplace(n, std::pow(lambda, static_cast<double>(n)) * f);
    }
    return CrossedElement(std::move(out));
}

ExprFun expectation(std::int64_t n, const CrossedElement& a) { return a.coefficient(n); }

double fejer_weight(std::int64_t k, std::int64_t n) {
    const std::int64_t an = n < 0 ? -n : n;
    if (an > k) return 0.0;
    return 1.0 - static_cast<double>(an) / static_cast<double>(k + 1);
}

CrossedElement fejer(std::int64_t k, const CrossedElement& a) {
    if (k < 0) throw DomainError("fejer: k must be >= 0");
    CrossedElement::Coefficients out;
    for (const auto& [n, f] : a.coefficients()) {
        const double w = fejer_weight(k, n);
        if (w == 0.0) continue;
        out.emplace(n, w == 1.0 ? f : Complex{w, 0.0} * f);
    }
    return CrossedElement(std::move(out));
}

double sup_distance(const CrossedElement& a, const CrossedElement& b) {
    std::set<std::int64_t> support;
    for (const auto& [n, f] : a.coefficients()) support.insert(n);
    for (const auto& [n, f] : b.coefficients()) support.insert(n);
    double worst = 0.0;
    for (std::int64_t n : support) worst = std::max(worst, sup_distance(a.coefficient(n), b.coefficient(n)));
    return worst;
}

bool approx_equal(const CrossedElement& a, const CrossedElement& b, double tol) {
    return sup_distance(a, b) <= tol;
}

}  // namespace diskcp
