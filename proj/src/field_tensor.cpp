#include "nullcharge/field_tensor.hpp"

#include <cmath>

namespace nullcharge {

namespace {

bool finite3(const Vec3& v) {
    return std::isfinite(v.x) && std::isfinite(v.y) && std::isfinite(v.z);
}

// map (mu,nu), mu<nu, to the storage slot
constexpr int slot(int mu, int nu) {
    // (0,1)->0 (0,2)->1 (0,3)->2 (1,2)->3 (1,3)->4 (2,3)->5
    return mu == 0 ? nu - 1 : mu + nu;
}

}  // namespace

FieldEB::FieldEB(const Vec3& e, const Vec3& b) : E(e), B(b) {
    if (!finite3(e) || !finite3(b))
        throw PreconditionViolation("FieldEB: non-finite component");
}

EmTensor EmTensor::wedge(const FourVector& p, const FourVector& w) {
    EmTensor r;
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = mu + 1; nu < 4; ++nu)
            r.f_[slot(mu, nu)] = p[mu] * w[nu] - p[nu] * w[mu];
    return r;
}

EmTensor EmTensor::from_components(double f01, double f02, double f03,
                                   double f12, double f13, double f23) {
    EmTensor r;
    r.f_ = {f01, f02, f03, f12, f13, f23};
    return r;
}

double EmTensor::cov(int mu, int nu) const {
    if (mu == nu) return 0.0;
    return mu < nu ? f_[slot(mu, nu)] : -f_[slot(nu, mu)];
}

Mat4 EmTensor::covariant() const {
    Mat4 r;
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu) r.m[mu][nu] = cov(mu, nu);
    return r;
}

Mat4 EmTensor::mixed() const {
    Mat4 r = covariant();
    for (int nu = 0; nu < 4; ++nu) r.m[0][nu] = -r.m[0][nu];
    return r;
}

Mat4 EmTensor::contravariant() const {
    Mat4 r = mixed();
    for (int mu = 0; mu < 4; ++mu) r.m[mu][0] = -r.m[mu][0];
    return r;
}

EmTensor EmTensor::operator+(const EmTensor& o) const {
    EmTensor r;
    for (int i = 0; i < 6; ++i) r.f_[i] = f_[i] + o.f_[i];
    return r;
}

EmTensor EmTensor::operator*(double c) const {
    EmTensor r;
    for (int i = 0; i < 6; ++i) r.f_[i] = f_[i] * c;
    return r;
}

double EmTensor::max_abs() const {
    double s = 0;
    for (double v : f_) s = std::max(s, std::abs(v));
    return s;
}

// Layout fixed by the Lorentz-force contract: F_{i0} = E_i, F_{ij} = eps_{ijk} B_k.
EmTensor em_tensor_from_eb(const FieldEB& f) {
    return EmTensor::from_components(-f.E.x, -f.E.y, -f.E.z,
                                     f.B.z, -f.B.y, f.B.x);
}

FieldEB eb_from_tensor(const EmTensor& F) {
    return FieldEB({F.cov(1, 0), F.cov(2, 0), F.cov(3, 0)},
                   {F.cov(2, 3), F.cov(3, 1), F.cov(1, 2)});
}

std::pair<double, double> em_invariants(const FieldEB& f) {
    return {f.B.norm2() - f.E.norm2(), f.E.dot(f.B)};
}

FourVector lorentz_force(double q, const EmTensor& F, const FourVector& v) {
    return (F.mixed() * v) * q;
}

Mat4 maxwell_stress_energy(const EmTensor& F) {
    constexpr double four_pi = 4.0 * M_PI;
    Mat4 contra = F.contravariant();
    Mat4 mix = F.mixed();  // F^nu{}_la read as mix.m[nu][la]
    Mat4 cov = F.covariant();
    double f2 = 0;  // f^{ka la} f_{ka la}
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) f2 += contra.m[a][b] * cov.m[a][b];
    Mat4 eta = Mat4::metric();
    Mat4 t;
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu) {
            double s = 0;
            for (int la = 0; la < 4; ++la) s += contra.m[mu][la] * mix.m[nu][la];
            t.m[mu][nu] = (s - 0.25 * eta.m[mu][nu] * f2) / four_pi;
        }
    return t;
}

Mat4 RotationToVelocity::embedded() const {
    Mat4 r = Mat4::identity();
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r.m[i + 1][j + 1] = omega.m[i][j];
    return r;
}

RotationToVelocity rotation_to_velocity(const Vec3& v) {
    if (std::abs(v.norm() - 1.0) > 1e-9)
        throw PreconditionViolation("rotation_to_velocity: |v| != 1");
    double cos_th = std::clamp(v.z, -1.0, 1.0);
    double sin_th = std::sqrt(std::max(0.0, 1.0 - cos_th * cos_th));
    double phi = 0.0;  // pole convention
    if (sin_th > 1e-12) phi = std::atan2(v.y, v.x);
    double cp = std::cos(phi), sp = std::sin(phi);

    Mat3 rz;
    rz.m = {{{cp, -sp, 0}, {sp, cp, 0}, {0, 0, 1}}};
    Mat3 ry;
    ry.m = {{{cos_th, 0, sin_th}, {0, 1, 0}, {-sin_th, 0, cos_th}}};
    return RotationToVelocity{rz * ry};
}

}  // namespace nullcharge
