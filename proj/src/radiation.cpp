#include "nullcharge/radiation.hpp"

#include <cmath>

#include "nullcharge/errors.hpp"
#include "nullcharge/field_tensor.hpp"
#include "nullcharge/quadrature.hpp"

namespace nullcharge {

Mat4 stress_energy(double q, const RetardedFrame& fr) {
    if (fr.r < kRayGuardFraction * fr.R.t)
        throw RadiusUnderflow("stress_energy: retarded distance underflow");
    double a2 = mdot(fr.a, fr.a);
    double factor = q * q * a2 / (4.0 * M_PI * fr.r * fr.r);
    Mat4 t;
    for (int al = 0; al < 4; ++al)
        for (int be = 0; be < 4; ++be) t.m[al][be] = factor * fr.k[al] * fr.k[be];
    return t;
}

std::pair<FourVector, double> curvilinear_to_cartesian(const NullWorldline& w, double t,
                                                       double s, double theta, double phi) {
    if (!(s < t))
        throw PreconditionViolation("curvilinear_to_cartesian: s must precede t");
    Vec3 n{std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
    Mat3 omega = rotation_to_velocity(w.velocity(s)).omega;
    FourVector x(t, w.position(s) + (omega * n) * (t - s));
    double sqrt_g = (t - s) * (t - s) * std::sin(theta) * (1.0 - std::cos(theta));
    return {x, sqrt_g};
}

namespace {

void check_epsilon(double epsilon) {
    if (!(epsilon > 0.0) || !(epsilon <= M_PI))
        throw PreconditionViolation("cutoff factors: epsilon must lie in (0, pi]");
}

}  // namespace

CutoffFactors cutoff_factors(double epsilon) {
    check_epsilon(epsilon);
    double c = 1.0 - std::cos(epsilon);
    CutoffFactors out;
    out.epsilon = epsilon;
    out.I0 = 1.0 / (2.0 * c * c) - 1.0 / 8.0;
    out.I1 = 3.0 / 8.0 - 1.0 / c + 1.0 / (2.0 * c * c);
    return out;
}

CutoffFactors cutoff_factors_quadrature(double epsilon, double tol) {
    check_epsilon(epsilon);
    auto w3 = [](double th) {
        double c = 1.0 - std::cos(th);
        return std::sin(th) / (c * c * c);
    };
    CutoffFactors out;
    out.epsilon = epsilon;
    out.I0 = adaptive_simpson([&](double th) { return w3(th); }, epsilon, M_PI, tol, tol);
    out.I1 = adaptive_simpson([&](double th) { return w3(th) * std::cos(th); }, epsilon, M_PI, tol, tol);
    return out;
}

FourVector radiated_momentum(double q, const NullWorldline& w, double t,
                             double epsilon, double quad_tol) {
    CutoffFactors cf = cutoff_factors(epsilon);
    double lo = w.t_min(), hi = std::min(t, w.t_max());
    if (!(hi > lo))
        throw PreconditionViolation("radiated_momentum: empty worldline interval");
    auto a2 = [&](double s) { return w.acceleration(s).norm2(); };
    double half_q2 = 0.5 * q * q;
    FourVector p;
    p.t = half_q2 * cf.I0 * adaptive_simpson(a2, lo, hi, quad_tol, quad_tol);
    for (int i = 0; i < 3; ++i)
        p[i + 1] = half_q2 * cf.I1 *
                   adaptive_simpson([&](double s) { return a2(s) * w.velocity(s)[i]; },
                                    lo, hi, quad_tol, quad_tol);
    return p;
}

Mat4 radiated_angular_momentum(double q, const NullWorldline& w, double t,
                               double epsilon, double quad_tol) {
    CutoffFactors cf = cutoff_factors(epsilon);
    double lo = w.t_min(), hi = std::min(t, w.t_max());
    if (!(hi > lo))
        throw PreconditionViolation("radiated_angular_momentum: empty worldline interval");
    auto a2 = [&](double s) { return w.acceleration(s).norm2(); };
    double half_q2 = 0.5 * q * q;

    Mat4 M;
    for (int i = 0; i < 3; ++i) {
        double sv = adaptive_simpson([&](double s) { return a2(s) * s * w.velocity(s)[i]; },
                                     lo, hi, quad_tol, quad_tol);
        double zi = adaptive_simpson([&](double s) { return a2(s) * w.position(s)[i]; },
                                     lo, hi, quad_tol, quad_tol);
        double m0i = half_q2 * (cf.I1 * sv - cf.I0 * zi);
        M.m[0][i + 1] = m0i;
        M.m[i + 1][0] = -m0i;
    }
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            double mij = half_q2 * cf.I1 *
                         adaptive_simpson(
                             [&](double s) {
                                 Vec3 z = w.position(s), v = w.velocity(s);
                                 return a2(s) * (z[i] * v[j] - z[j] * v[i]);
                             },
                             lo, hi, quad_tol, quad_tol);
            M.m[i + 1][j + 1] = mij;
            M.m[j + 1][i + 1] = -mij;
        }
    return M;
}

}  // namespace nullcharge
