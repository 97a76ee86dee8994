#pragma once

// Expression trees for continuous functions on the closed disk. Trees are
// immutable and share structure; copying an ExprFun is cheap.

#include <memory>
#include <string>
#include <vector>

#include "diskcp/moebius.hpp"

namespace diskcp {

enum class ExprKind { Const, Z, ConjZ, Add, Mul, Precompose };

class ExprFun {
public:
    /// The zero function.
    ExprFun();

    static ExprFun constant(Complex c);
    static ExprFun z();
    static ExprFun conj_z();

    ExprKind kind() const;
    /// Const payload; zero for other kinds.
    Complex value() const;
    const ExprFun& lhs() const;
    const ExprFun& rhs() const;
    /// Precompose: the inner function and the word applied first.
    const ExprFun& inner() const;
    const MoebiusWord& word() const;

    Complex evaluate(Complex z) const;
    Complex operator()(Complex z) const { return evaluate(z); }

    /// f o w. Nested precompositions are flattened into one word.
    ExprFun precompose(const MoebiusWord& w) const;
    /// Pointwise complex conjugate, pushed down to the leaves.
    ExprFun conjugate() const;

    /// Tree depth (leaves have depth 0).
    int depth() const;
    std::size_t node_count() const;

    bool is_const() const { return kind() == ExprKind::Const; }

    friend ExprFun operator+(const ExprFun& a, const ExprFun& b);
    friend ExprFun operator*(const ExprFun& a, const ExprFun& b);
    friend ExprFun operator-(const ExprFun& a, const ExprFun& b);
    friend ExprFun operator*(Complex s, const ExprFun& a);

    struct Node;

private:
    explicit ExprFun(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

/// Prefix-notation rendering, e.g. (add z (const 1 0)).
std::string to_string(const ExprFun& f);

/// The fixed 64-point set (32 interior Halton points, 32 boundary roots of
/// unity) used to decide equality of coefficient functions.
const std::vector<Complex>& expr_samples();

inline constexpr double kExprTolerance = 1e-10;

double sup_distance(const ExprFun& f, const ExprFun& g);
bool approx_equal(const ExprFun& f, const ExprFun& g, double tol = kExprTolerance);

}  // namespace diskcp
