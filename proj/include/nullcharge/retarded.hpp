#ifndef NULLCHARGE_RETARDED_HPP
#define NULLCHARGE_RETARDED_HPP

#include <array>

#include "nullcharge/field_tensor.hpp"
#include "nullcharge/linalg.hpp"
#include "nullcharge/worldline.hpp"

namespace nullcharge {

/// Full retarded kinematic packet at an observation point:
/// R = x - z(s) null and future-pointing, r = -(R.u), k = R/r,
/// u = (1, v(s)), a = (0, a(s)), a_k = (a.k).
struct RetardedFrame {
    double s = 0.0;
    double r = 0.0;
    FourVector R, k, u, a;
    double a_k = 0.0;
};

/// Fraction of the causal distance (x^0 - s) below which the retarded
/// distance counts as "on the singular ray".
inline constexpr double kRayGuardFraction = 1e-9;

/// Latest root s < x^0 of (x^0 - s)^2 = |x - z(s)|^2. Bracketing scan with
/// step (t_max - t_min)/1024, bisection to |ds| <= tol (1 + |s|), then a
/// Newton polish. Throws NoIntersection, SingularRay or AmbiguousRoot.
double retarded_time(const NullWorldline& w, const FourVector& x, double tol = 1e-12);

RetardedFrame retarded_frame(const NullWorldline& w, const FourVector& x, double tol = 1e-12);

/// Lienard-Wiechert potential, contravariant components A^a = q u^a(s) / r.
FourVector lw_potential(double q, const RetardedFrame& fr);

/// Far field f = q (a ^ k + a_k u ^ k) / r.
EmTensor field_tensor(double q, const RetardedFrame& fr);

/// Retarded distance r at x, the proximity measure to the singular ray.
double singular_ray_distance(const NullWorldline& w, const FourVector& x);

/// Central-difference estimate of the wave operator acting on A^a; vanishes
/// as O(h^2) away from the worldline and its forward tangent rays.
std::array<double, 4> wave_operator_residual(double q, const NullWorldline& w,
                                             const FourVector& x, double h);

}  // namespace nullcharge

#endif
