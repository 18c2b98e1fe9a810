#ifndef NULLCHARGE_CONFORMAL_HPP
#define NULLCHARGE_CONFORMAL_HPP

#include <utility>

#include "nullcharge/field_tensor.hpp"
#include "nullcharge/linalg.hpp"

namespace nullcharge {

struct ConformalParams {
    double theta = 0.0;  // dilatation parameter
    FourVector b;        // special-conformal parameter
};

/// Jacobian data of a special conformal transformation:
/// Omega^mu{}_alpha = dx'^mu/dx^alpha and the conformal factor D, satisfying
/// Omega^T eta Omega = D^-2 eta.
struct ConformalJacobian {
    Mat4 Omega;
    double D = 1.0;
};

/// x' = e^theta x.
FourVector dilate(const FourVector& x, double theta);

/// x' = (x - b (x.x)) / D with D = 1 - 2(x.b) + (x.x)(b.b). Returns (x', D);
/// throws DegenerateD when |D| < 1e-14.
std::pair<FourVector, double> special_conformal(const FourVector& x, const FourVector& b);

/// Factored Jacobian Omega = D^-1 lambda(x'') lambda(x), x'' = x/(x.x) - b,
/// lambda(y) = I - 2 y y / (y.y). Throws LightConePoint when x or x'' is too
/// close to the light cone for the lambda factors.
ConformalJacobian conformal_jacobian(const FourVector& x, const FourVector& b);

/// Dilatation-transformed field, F' = e^{-2 theta} F.
EmTensor transform_field(const EmTensor& F, double theta);

/// Special-conformal-transformed field: F' solving
/// F_{ab} = F'_{mn} Omega^m{}_a Omega^n{}_b.
EmTensor transform_field(const EmTensor& F, const ConformalJacobian& j);

/// Residual of the Lorentz-force balance in the conformally transformed
/// variables for a uniform field f and its admissible solution through x.
/// Vanishes to rounding when the transformation is applied consistently.
double eom_invariance_residual(double q, const FieldEB& f, const FourVector& x,
                               const ConformalParams& params);

}  // namespace nullcharge

#endif
