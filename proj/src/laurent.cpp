#include "diskcp/laurent.hpp"

#include <algorithm>
#include <cmath>

namespace diskcp {

Laurent::Laurent(Coefficients c) {
    for (const auto& [n, v] : c) {
        if (v != Complex{}) coeffs_[n] += v;
    }
}

Laurent Laurent::monomial(Complex c, std::int64_t n) { return Laurent(Coefficients{{n, c}}); }

Complex Laurent::coefficient(std::int64_t n) const {
    auto it = coeffs_.find(n);
    return it == coeffs_.end() ? Complex{} : it->second;
}

Complex Laurent::evaluate(Complex z) const {
    Complex acc{};
    for (const auto& [n, c] : coeffs_) acc += c * std::pow(z, static_cast<int>(n));
    return acc;
}

Laurent Laurent::adjoint() const {
    Coefficients out;
    for (const auto& [n, c] : coeffs_) out[-n] = std::conj(c);
    return Laurent(std::move(out));
}

Eigen::MatrixXcd Laurent::toeplitz(Eigen::Index n) const {
    Eigen::MatrixXcd t = Eigen::MatrixXcd::Zero(n, n);
    for (const auto& [d, c] : coeffs_) {
        for (Eigen::Index j = 0; j < n; ++j) {
            const Eigen::Index i = j + static_cast<Eigen::Index>(d);
            if (i >= 0 && i < n) t(i, j) = c;
        }
    }
    return t;
}

Laurent operator+(const Laurent& a, const Laurent& b) {
    Laurent::Coefficients out = a.coeffs_;
    for (const auto& [n, c] : b.coeffs_) out[n] += c;
    return Laurent(std::move(out));
}

Laurent operator*(const Laurent& a, const Laurent& b) {
    Laurent::Coefficients out;
    for (const auto& [m, x] : a.coeffs_) {
        for (const auto& [n, y] : b.coeffs_) out[m + n] += x * y;
    }
    return Laurent(std::move(out));
}

double distance(const Laurent& a, const Laurent& b) {
    double worst = 0.0;
    for (const auto& [n, c] : a.coeffs_) worst = std::max(worst, std::abs(c - b.coefficient(n)));
    for (const auto& [n, c] : b.coeffs_) worst = std::max(worst, std::abs(c - a.coefficient(n)));
    return worst;
}

}  // namespace diskcp
