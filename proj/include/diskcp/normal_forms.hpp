#pragma once

#include <variant>

#include "diskcp/moebius.hpp"

namespace diskcp {

struct HyperbolicInvariant {
    double a;  ///< canonical map z -> (z + a) / (1 + a z)
};
struct EllipticInvariant {
    Complex mu;  ///< rotation factor, on T \ {1}
};
struct ParabolicInvariant {
    int orientation;  ///< +1 for parabolic_plus, -1 for parabolic_minus
};
struct NoInvariant {};

using ConjugacyInvariant =
    std::variant<NoInvariant, HyperbolicInvariant, EllipticInvariant, ParabolicInvariant>;

/// conjugator o input o conjugator^-1 == canonical.
struct NormalFormResult {
    AutomorphismClass cls;
    DiskAutomorphism canonical;
    MoebiusWord conjugator;
    ConjugacyInvariant invariant;
    /// Sup distance between the conjugated input and `canonical` on 64 samples.
    double residual = 0.0;
};

/// Tolerance on the conjugation residual; NumericalError beyond it.
inline constexpr double kNormalFormTolerance = 1e-9;

NormalFormResult hyperbolic_normal_form(const DiskAutomorphism& phi);
NormalFormResult elliptic_normal_form(const DiskAutomorphism& phi);
NormalFormResult parabolic_normal_form(const DiskAutomorphism& phi);
/// Dispatches on classify(phi); the identity maps to itself.
NormalFormResult normal_form(const DiskAutomorphism& phi);

/// Rotation number in [0, 1) of an elliptic map: arg(phi'(c)) / 2 pi at the
/// interior fixed point c.
double rotation_number(const DiskAutomorphism& phi);

bool are_topologically_conjugate(const DiskAutomorphism& phi, const DiskAutomorphism& psi);

/// Sup over 48 interior + 16 boundary samples of |w o phi o w^-1 - canonical|.
double conjugation_residual(const MoebiusWord& conjugator, const DiskAutomorphism& phi,
                            const DiskAutomorphism& canonical);

}  // namespace diskcp
