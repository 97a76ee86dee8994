#include "diskcp/expr.hpp"

#include <algorithm>
#include <sstream>

namespace diskcp {

struct ExprFun::Node {
    ExprKind kind = ExprKind::Const;
    Complex value{};
    ExprFun lhs_child;  // Add/Mul lhs, Precompose inner
    ExprFun rhs_child;
    MoebiusWord word;

    // Children default-construct to the shared zero leaf, so Node needs a
    // constructor that does not recurse.
    explicit Node(ExprKind k) : kind(k), lhs_child(nullptr), rhs_child(nullptr) {}
};

namespace {

std::shared_ptr<const ExprFun::Node> leaf(ExprKind kind, Complex value = {}) {
    auto n = std::make_shared<ExprFun::Node>(kind);
    n->value = value;
    return n;
}

const std::shared_ptr<const ExprFun::Node>& zero_leaf() {
    static const std::shared_ptr<const ExprFun::Node> z = leaf(ExprKind::Const);
    return z;
}

}  // namespace

ExprFun::ExprFun() : node_(zero_leaf()) {}

ExprFun ExprFun::constant(Complex c) { return ExprFun(leaf(ExprKind::Const, c)); }
ExprFun ExprFun::z() { return ExprFun(leaf(ExprKind::Z)); }
ExprFun ExprFun::conj_z() { return ExprFun(leaf(ExprKind::ConjZ)); }

ExprKind ExprFun::kind() const { return node_->kind; }
Complex ExprFun::value() const { return node_->kind == ExprKind::Const ? node_->value : Complex{}; }
const ExprFun& ExprFun::lhs() const { return node_->lhs_child; }
const ExprFun& ExprFun::rhs() const { return node_->rhs_child; }
const ExprFun& ExprFun::inner() const { return node_->lhs_child; }
const MoebiusWord& ExprFun::word() const { return node_->word; }

Complex ExprFun::evaluate(Complex z) const {
    const Node& n = *node_;
    switch (n.kind) {
        case ExprKind::Const: return n.value;
        case ExprKind::Z: return z;
        case ExprKind::ConjZ: return std::conj(z);
        case ExprKind::Add: return n.lhs_child.evaluate(z) + n.rhs_child.evaluate(z);
        case ExprKind::Mul: return n.lhs_child.evaluate(z) * n.rhs_child.evaluate(z);
        case ExprKind::Precompose: return n.lhs_child.evaluate(n.word.apply(z));
    }
    return {};
}

ExprFun ExprFun::precompose(const MoebiusWord& w) const {
    if (w.empty()) return *this;
    switch (kind()) {
        case ExprKind::Const: return *this;
        case ExprKind::Precompose: return inner().precompose(compose(word(), w));
        default: break;
    }
    auto n = std::make_shared<Node>(ExprKind::Precompose);
    n->lhs_child = *this;
    n->word = w;
    return ExprFun(std::move(n));
}

ExprFun ExprFun::conjugate() const {
    switch (kind()) {
        case ExprKind::Const: return constant(std::conj(value()));
        case ExprKind::Z: return conj_z();
        case ExprKind::ConjZ: return z();
        case ExprKind::Add: return lhs().conjugate() + rhs().conjugate();
        case ExprKind::Mul: return lhs().conjugate() * rhs().conjugate();
        case ExprKind::Precompose: return inner().conjugate().precompose(word());
    }
    return {};
}

int ExprFun::depth() const {
    switch (kind()) {
        case ExprKind::Add:
        case ExprKind::Mul: return 1 + std::max(lhs().depth(), rhs().depth());
        case ExprKind::Precompose: return 1 + inner().depth();
        default: return 0;
    }
}

std::size_t ExprFun::node_count() const {
    switch (kind()) {
        case ExprKind::Add:
        case ExprKind::Mul: return 1 + lhs().node_count() + rhs().node_count();
        case ExprKind::Precompose: return 1 + inner().node_count();
        default: return 1;
    }
}

ExprFun operator+(const ExprFun& a, const ExprFun& b) {
    if (a.is_const() && b.is_const()) return ExprFun::constant(a.value() + b.value());
    if (a.is_const() && a.value() == Complex{}) return b;
    if (b.is_const() && b.value() == Complex{}) return a;
    auto n = std::make_shared<ExprFun::Node>(ExprKind::Add);
    n->lhs_child = a;
    n->rhs_child = b;
    return ExprFun(std::move(n));
}

ExprFun operator*(const ExprFun& a, const ExprFun& b) {
    if (a.is_const() && b.is_const()) return ExprFun::constant(a.value() * b.value());
    if (a.is_const() && a.value() == Complex{1.0, 0.0}) return b;
    if (b.is_const() && b.value() == Complex{1.0, 0.0}) return a;
    auto n = std::make_shared<ExprFun::Node>(ExprKind::Mul);
    n->lhs_child = a;
    n->rhs_child = b;
    return ExprFun(std::move(n));
}

ExprFun operator*(Complex s, const ExprFun& a) { return ExprFun::constant(s) * a; }

ExprFun operator-(const ExprFun& a, const ExprFun& b) { return a + Complex{-1.0, 0.0} * b; }

namespace {

void render(std::ostream& os, const ExprFun& f) {
    switch (f.kind()) {
        case ExprKind::Const: os << "(const " << f.value().real() << ' ' << f.value().imag() << ')'; return;
        case ExprKind::Z: os << 'z'; return;
        case ExprKind::ConjZ: os << "conjz"; return;
        case ExprKind::Add:
        case ExprKind::Mul:
            os << '(' << (f.kind() == ExprKind::Add ? "add " : "mul ");
            render(os, f.lhs());
            os << ' ';
            render(os, f.rhs());
            os << ')';
            return;
        case ExprKind::Precompose:
            os << "(precompose ";
            render(os, f.inner());
            for (const WordFactor& w : f.word().factors()) {
                os << " [" << w.map.theta() << ' ' << w.map.z0().real() << ' ' << w.map.z0().imag()
                   << " ^" << w.exp << ']';
            }
            os << ')';
            return;
    }
}

}  // namespace

std::string to_string(const ExprFun& f) {
    std::ostringstream os;
    os.precision(17);
    render(os, f);
    return os.str();
}

const std::vector<Complex>& expr_samples() {
    static const std::vector<Complex> samples = disk_samples(32, 32);
    return samples;
}

double sup_distance(const ExprFun& f, const ExprFun& g) {
    return sup_distance([&](Complex z) { return f.evaluate(z); },
                        [&](Complex z) { return g.evaluate(z); }, expr_samples());
}

bool approx_equal(const ExprFun& f, const ExprFun& g, double tol) { return sup_distance(f, g) <= tol; }

}  // namespace diskcp
