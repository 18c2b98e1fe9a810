#ifndef NULLCHARGE_FIELD_TENSOR_HPP
#define NULLCHARGE_FIELD_TENSOR_HPP

#include <utility>

#include "nullcharge/errors.hpp"
#include "nullcharge/linalg.hpp"

namespace nullcharge {

/// Electric and magnetic 3-vectors at a point (Heaviside-Lorentz units).
struct FieldEB {
    Vec3 E, B;

    FieldEB() = default;
    FieldEB(const Vec3& e, const Vec3& b);
};

/// Antisymmetric rank-2 field tensor. Stores the six independent covariant
/// components, so F_{mu nu} = -F_{nu mu} holds exactly by construction.
class EmTensor {
public:
    EmTensor() = default;

    /// Wedge of two covariant 4-vectors: (p ^ w)_{mu nu} = p_mu w_nu - p_nu w_mu.
    static EmTensor wedge(const FourVector& p_cov, const FourVector& w_cov);

    /// Build from the six covariant components F_{01}, F_{02}, F_{03}, F_{12}, F_{13}, F_{23}.
    static EmTensor from_components(double f01, double f02, double f03,
                                    double f12, double f13, double f23);

    /// Covariant component F_{mu nu}.
    double cov(int mu, int nu) const;

    Mat4 covariant() const;
    /// Mixed components F^mu{}_nu (first index raised).
    Mat4 mixed() const;
    /// Contravariant components F^{mu nu}.
    Mat4 contravariant() const;

    EmTensor operator+(const EmTensor& o) const;
    EmTensor operator*(double c) const;

    double max_abs() const;

private:
    // f_[k] holds F_{mu nu} for (mu,nu) in order (0,1),(0,2),(0,3),(1,2),(1,3),(2,3).
    std::array<double, 6> f_{};
};

/// Electromagnetic tensor corresponding to the (E, B) decomposition that makes
/// lorentz_force reproduce the 3+1 split below.
EmTensor em_tensor_from_eb(const FieldEB& f);

/// Inverse of em_tensor_from_eb (exact round-trip).
FieldEB eb_from_tensor(const EmTensor& F);

/// Field invariants (B^2 - E^2, E.B).
std::pair<double, double> em_invariants(const FieldEB& f);

/// q F^mu{}_nu v^nu. For v = (1, v3) the time component equals q(E.v3) and the
/// space components equal q E + q v3 x B.
FourVector lorentz_force(double q, const EmTensor& F, const FourVector& v);

/// Maxwell stress-energy tensor T^{mu nu} = (f^{mu la} f^nu{}_la - eta^{mu nu} f^2 / 4) / 4pi.
Mat4 maxwell_stress_energy(const EmTensor& F);

/// Rotation taking the lab z-axis onto a given unit velocity, plus its 4x4
/// embedding with trivial time row/column.
struct RotationToVelocity {
    Mat3 omega;
    Mat4 embedded() const;
};

/// Composition Rz(phi_v) * Ry(theta_v) with (theta_v, phi_v) the polar angles
/// of v. Requires |v| = 1 within 1e-9; at the poles phi_v = 0 is used.
RotationToVelocity rotation_to_velocity(const Vec3& v);

}  // namespace nullcharge

#endif
