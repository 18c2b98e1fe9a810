#ifndef NULLCHARGE_RADIATION_HPP
#define NULLCHARGE_RADIATION_HPP

#include <utility>

#include "nullcharge/linalg.hpp"
#include "nullcharge/retarded.hpp"
#include "nullcharge/worldline.hpp"

namespace nullcharge {

/// Radiative stress-energy of the photon-like charge,
/// T^{ab} = q^2 a^2 k^a k^b / (4 pi r^2).
Mat4 stress_energy(double q, const RetardedFrame& fr);

/// Chart (t, s, theta, phi) -> x = z(s) + (t-s) Omega n with
/// n = (1, sin th cos ph, sin th sin ph, cos th) and Omega the rotation taking
/// z-hat onto v(s). Returns (x, sqrt(-g)) with sqrt(-g) = (t-s)^2 sin th (1 - cos th).
std::pair<FourVector, double> curvilinear_to_cartesian(const NullWorldline& w, double t,
                                                       double s, double theta, double phi);

/// The divergent angular factors, integrated over [epsilon, pi]:
/// I0 = int sin th (1-cos th)^-3, I1 = int sin th cos th (1-cos th)^-3.
struct CutoffFactors {
    double epsilon = 0.0;
    double I0 = 0.0;
    double I1 = 0.0;
};

/// Closed forms of the cutoff factors; requires 0 < epsilon <= pi.
CutoffFactors cutoff_factors(double epsilon);

/// Adaptive-quadrature evaluation of the same integrals; the independent
/// cross-check for cutoff_factors.
CutoffFactors cutoff_factors_quadrature(double epsilon, double tol);

/// Radiated energy-momentum accumulated on the hyperplane x^0 = t:
/// p^0 = (q^2/2) I0 int a^2 ds, p^i = (q^2/2) I1 int a^2 v^i ds over [t_min, t].
FourVector radiated_momentum(double q, const NullWorldline& w, double t,
                             double epsilon, double quad_tol);

/// Radiated angular momentum; antisymmetric 4x4 with
/// M^{0i} = (q^2/2) I1 int a^2 s v^i ds - (q^2/2) I0 int a^2 z^i ds,
/// M^{ij} = (q^2/2) I1 int a^2 (z^i v^j - z^j v^i) ds.
Mat4 radiated_angular_momentum(double q, const NullWorldline& w, double t,
                               double epsilon, double quad_tol);

}  // namespace nullcharge

#endif
