#pragma once

#include <cstdint>
#include <map>

#include <Eigen/Dense>

#include "diskcp/moebius.hpp"

namespace diskcp {

/// Finite Laurent polynomial sum_n c_n Z^n on the unit circle.
class Laurent {
public:
    using Coefficients = std::map<std::int64_t, Complex>;

    Laurent() = default;
    explicit Laurent(Coefficients c);
    static Laurent monomial(Complex c, std::int64_t n);

    const Coefficients& coefficients() const { return coeffs_; }
    Complex coefficient(std::int64_t n) const;

    /// Evaluation at a point of T.
    Complex evaluate(Complex z) const;
    /// c_n -> conj(c_{-n}) (the adjoint on C(T)).
    Laurent adjoint() const;

    /// Toeplitz matrix T(i, j) = c_{i - j} of size n x n.
    Eigen::MatrixXcd toeplitz(Eigen::Index n) const;

    friend Laurent operator+(const Laurent& a, const Laurent& b);
    friend Laurent operator*(const Laurent& a, const Laurent& b);

    /// Max coefficient difference.
    friend double distance(const Laurent& a, const Laurent& b);

private:
    Coefficients coeffs_;
};

}  // namespace diskcp
