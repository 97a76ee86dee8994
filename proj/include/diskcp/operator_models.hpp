#pragma once

// Finite matrix images of crossed-product elements under the irreducible
// representations: orbit representations on l^2(Z) compressed to indices
// -N..N, one-dimensional characters, the elliptic circle fibres and the
// q x q model for rational rotations.

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "diskcp/crossed_product.hpp"
#include "diskcp/dynamics.hpp"
#include "diskcp/laurent.hpp"

namespace diskcp {

/// A -> Diag(phi^k(x)), U -> bilateral shift; phi hyperbolic.
struct HyperbolicOrbit {
    Complex x;
};
/// Same construction for a parabolic phi.
struct ParabolicOrbit {
    Complex x;
};
/// One-dimensional: A -> fixed point, U -> exp(2 i pi theta).
struct Character {
    Complex fixed_point;
    double theta = 0.0;
};
/// Rotation phi, restricted to the circle of radius r, composed with the
/// representation V -> Diag(fiber omega^k), U -> u_phase * shift.
struct EllipticCircle {
    double radius = 1.0;
    Complex fiber{1.0, 0.0};
    Complex u_phase{1.0, 0.0};
};
/// Rotation by p/q: U -> eta * cyclic shift, A -> diag(lambda omega^k),
/// k = 0..q-1, |lambda| = t <= 1.
struct EllipticRational {
    std::int64_t p = 0;
    std::int64_t q = 1;
    Complex eta{1.0, 0.0};
    Complex lambda{1.0, 0.0};
};

using RepKind = std::variant<HyperbolicOrbit, ParabolicOrbit, Character, EllipticCircle, EllipticRational>;

std::string kind_name(const RepKind& kind);

struct TruncatedRep {
    RepKind kind;
    DiskAutomorphism phi;
    std::int64_t half_width = 0;
    /// Points at which coefficient functions are sampled, in row order.
    std::vector<Complex> points;
    Eigen::MatrixXcd matrix;

    /// Row of index k (orbit kinds: k = -N..N).
    Eigen::Index row_of(std::int64_t k) const { return static_cast<Eigen::Index>(k + half_width); }
    bool is_orbit_kind() const;
};

/// KindMismatch if the kind does not fit classify(phi); RationalityRequired
/// for EllipticRational when theta != p/q.
TruncatedRep represent(const CrossedElement& a, const DiskAutomorphism& phi, const RepKind& kind,
                       std::int64_t half_width);

/// Matrix of U alone in the given kind.
Eigen::MatrixXcd unitary_image(const DiskAutomorphism& phi, const RepKind& kind, std::int64_t half_width);

/// max |U* A U - phi(A)| over the interior block (|k| <= N - 1 for orbit kinds,
/// everything for finite models).
double covariance_residual(const DiskAutomorphism& phi, const RepKind& kind, std::int64_t half_width);
/// Orbit kind chosen from classify(phi); elliptic maps use EllipticCircle at |x|.
double covariance_residual(const DiskAutomorphism& phi, Complex x, std::int64_t half_width);

/// Entries of `m` restricted to indices |k| <= half_width - margin.
Eigen::MatrixXcd interior_block(const Eigen::MatrixXcd& m, std::int64_t half_width, std::int64_t margin);

double max_abs(const Eigen::MatrixXcd& m);
double operator_norm(const Eigen::MatrixXcd& m);

/// Images under gamma = chi + chi: minus = sum f_n(repulsive) Z^-n,
/// plus = sum f_n(attractive) Z^n.
struct SymbolPair {
    Laurent minus;
    Laurent plus;
};

SymbolPair symbol(const CrossedElement& a, const DiskAutomorphism& phi);
SymbolPair symbol_product(const SymbolPair& a, const SymbolPair& b);
SymbolPair symbol_adjoint(const SymbolPair& a);
double distance(const SymbolPair& a, const SymbolPair& b);
/// Reads the symbol off the far ends of an orbit representation's diagonals
/// |n| <= bandwidth.
SymbolPair estimate_symbol(const TruncatedRep& rep, std::int64_t bandwidth);

/// Largest singular value of `residual` restricted to indices |k| > margin.
double residual_tail_norm(const Eigen::MatrixXcd& residual, std::int64_t half_width, std::int64_t margin);

struct BlockDecomposition {
    SymbolPair symbols;
    std::int64_t half_width = 0;
    /// Toeplitz matrices on H- (indices -1, -2, ..., -N identified with 0..N-1) and H+ (0..N).
    Eigen::MatrixXcd toeplitz_minus;
    Eigen::MatrixXcd toeplitz_plus;
    /// Block-diagonal assembly in the original index order.
    Eigen::MatrixXcd assembly;
    /// matrix - assembly.
    Eigen::MatrixXcd compact_residual;

    double residual_tail_norm(std::int64_t margin) const;
};

BlockDecomposition block_decompose(const TruncatedRep& rep, const CrossedElement& a);

struct ParabolicStructure {
    /// sum f_n(fixed point) Z^n.
    Laurent laurent;
    std::int64_t half_width = 0;
    Eigen::MatrixXcd compact_residual;

    double residual_tail_norm(std::int64_t margin) const;
    std::vector<double> tail_norms(const std::vector<std::int64_t>& margins) const;
};

ParabolicStructure parabolic_structure_residual(const TruncatedRep& rep, const CrossedElement& a);

/// Fourier modes c_{n,m} of f_n(t e^{i alpha}) in alpha: xi_t(a) = sum c_{n,m} V^m U^n.
struct FieldSample {
    double t = 0.0;
    std::map<std::pair<std::int64_t, std::int64_t>, Complex> modes;
    /// sum over n and m != 0 of |c_{n,m}|.
    double v_content = 0.0;
};

struct EllipticFieldReport {
    std::vector<FieldSample> samples;
    /// The t = 0 fibre as an element of C*(U).
    Laurent scalar_part;
    /// v_content at t = 0 (the first grid point must be 0 for this to be meaningful).
    double v_content_at_zero = 0.0;
    /// max |c_{n,m}(t) - c_{n,m}(t_0)| over the grid.
    double variation_in_t = 0.0;
    /// max |VU - e^{2 i pi theta} UV|; q x q model for rational theta, truncated otherwise.
    double relation_residual = 0.0;
    bool rational_model = false;
};

/// phi must be a rotation. `modes` sets the number of samples on each circle.
EllipticFieldReport elliptic_field_check(const CrossedElement& a, const DiskAutomorphism& phi,
                                         const std::vector<double>& t_grid, std::int64_t half_width = 20,
                                         int modes = 64);

std::vector<double> truncated_norm(const CrossedElement& a, const DiskAutomorphism& phi, const RepKind& kind,
                                   const std::vector<std::int64_t>& half_widths);

/// Eigenvalues of a diagonal representation matrix. KindMismatch otherwise.
std::vector<Complex> truncated_spectrum(const TruncatedRep& rep);

/// Hausdorff distance between a finite set and an orbit-closure description
/// (the circle is sampled at `circle_samples` points).
double hausdorff_distance(const std::vector<Complex>& points, const OrbitClosureDescr& closure,
                          int circle_samples = 4096);

}  // namespace diskcp
