#include "nullcharge/conformal.hpp"

#include <cmath>

#include "nullcharge/eigen_motion.hpp"
#include "nullcharge/errors.hpp"

namespace nullcharge {

namespace {

// lambda^beta{}_alpha(y) = delta - 2 y^beta y_alpha / (y.y); an involution.
Mat4 lambda_matrix(const FourVector& y) {
    double yy = mdot(y, y);
    FourVector y_cov = lower(y);
    Mat4 r = Mat4::identity();
    for (int be = 0; be < 4; ++be)
        for (int al = 0; al < 4; ++al) r.m[be][al] -= 2.0 * y[be] * y_cov[al] / yy;
    return r;
}

void require_off_cone(const FourVector& y, const char* what) {
    double n2 = y.norm_euclid() * y.norm_euclid();
    if (std::abs(mdot(y, y)) < 1e-12 * n2)
        throw LightConePoint(std::string("conformal_jacobian: ") + what +
                             " too close to the light cone");
}

bool is_zero(const FourVector& v) {
    return v.t == 0.0 && v.x == 0.0 && v.y == 0.0 && v.z == 0.0;
}

EmTensor tensor_from_matrix(const Mat4& m) {
    // antisymmetric part; the inputs are antisymmetric up to rounding
    return EmTensor::from_components(
        0.5 * (m.m[0][1] - m.m[1][0]), 0.5 * (m.m[0][2] - m.m[2][0]),
        0.5 * (m.m[0][3] - m.m[3][0]), 0.5 * (m.m[1][2] - m.m[2][1]),
        0.5 * (m.m[1][3] - m.m[3][1]), 0.5 * (m.m[2][3] - m.m[3][2]));
}

}  // namespace

FourVector dilate(const FourVector& x, double theta) {
    return x * std::exp(theta);
}

std::pair<FourVector, double> special_conformal(const FourVector& x, const FourVector& b) {
    double xx = mdot(x, x);
    double D = 1.0 - 2.0 * mdot(x, b) + xx * mdot(b, b);
    if (std::abs(D) < 1e-14)
        throw DegenerateD("special_conformal: conformal factor vanished");
    return {(x - b * xx) / D, D};
}

ConformalJacobian conformal_jacobian(const FourVector& x, const FourVector& b) {
    require_off_cone(x, "x");
    FourVector xpp = x / mdot(x, x) - b;
    require_off_cone(xpp, "x''");
    auto [xp, D] = special_conformal(x, b);
    (void)xp;
    return {(lambda_matrix(xpp) * lambda_matrix(x)) * (1.0 / D), D};
}

EmTensor transform_field(const EmTensor& F, double theta) {
    return F * std::exp(-2.0 * theta);
}

EmTensor transform_field(const EmTensor& F, const ConformalJacobian& j) {
    // Omega^-1 = D^2 eta Omega^T eta, from Omega^T eta Omega = D^-2 eta
    Mat4 eta = Mat4::metric();
    Mat4 inv = (eta * j.Omega.transposed() * eta) * (j.D * j.D);
    return tensor_from_matrix(inv.transposed() * F.covariant() * inv);
}

double eom_invariance_residual(double q, const FieldEB& f, const FourVector& x,
                               const ConformalParams& params) {
    EigenSolution sol = admissible_velocities(q, f);
    if (sol.velocities.empty())
        throw PreconditionViolation("eom_invariance_residual: no admissible velocity");
    Vec3 v = sol.velocities[0].v;
    FourVector u(1.0, v);
    double edot = q * f.E.dot(v);
    double e0 = 1.0;

    double scale_factor = std::exp(params.theta);
    bool pure_dilatation = is_zero(params.b);

    // momentum of the transformed solution as a function of the worldline
    // parameter: P(tau) = e'(tau) zdot'(tau)
    auto transformed_momentum = [&](double tau) {
        FourVector y = dilate(x + u * tau, params.theta);
        double e_val = (e0 + edot * tau) / (scale_factor * scale_factor);
        if (pure_dilatation) return (u * scale_factor) * e_val;
        ConformalJacobian j = conformal_jacobian(y, params.b);
        return (j.Omega * (u * scale_factor)) * (j.D * j.D * e_val);
    };

    // transformed field at the image of x
    EmTensor F_tr = transform_field(em_tensor_from_eb(f), params.theta);
    FourVector zdot_tr = u * scale_factor;
    if (!pure_dilatation) {
        ConformalJacobian j0 = conformal_jacobian(dilate(x, params.theta), params.b);
        F_tr = transform_field(F_tr, j0);
        zdot_tr = j0.Omega * zdot_tr;
    }
    FourVector rhs = lorentz_force(q, F_tr, zdot_tr);

    FourVector pdot;
    if (pure_dilatation) {
        // P(tau) is linear in tau; differentiate exactly
        pdot = u * (edot / scale_factor);
    } else {
        double h = 1e-5 * (1.0 + x.norm_euclid());
        pdot = (transformed_momentum(-2 * h) - transformed_momentum(2 * h)
                + (transformed_momentum(h) - transformed_momentum(-h)) * 8.0)
               / (12.0 * h);
    }
    return (pdot - rhs).norm_inf();
}

}  // namespace nullcharge
