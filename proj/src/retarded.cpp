#include "nullcharge/retarded.hpp"

#include <cmath>
#include <vector>

#include "nullcharge/errors.hpp"

namespace nullcharge {

namespace {

// Defining function of the retarded-time condition. Non-increasing in s for a
// unit-speed worldline, so each sign change brackets exactly one root.
double light_cone_gap(const NullWorldline& w, const FourVector& x, double s) {
    return (x.t - s) - (x.spatial() - w.position(s)).norm();
}

double retarded_distance_at(const NullWorldline& w, const FourVector& x, double s) {
    return (x.t - s) - (x.spatial() - w.position(s)).dot(w.velocity(s));
}

double polish_root(const NullWorldline& w, const FourVector& x, double s) {
    // Newton on G(s) = (x0-s)^2 - |x-z(s)|^2; G'(s) = -2 r(s).
    for (int it = 0; it < 8; ++it) {
        Vec3 d = x.spatial() - w.position(s);
        double g = (x.t - s) * (x.t - s) - d.norm2();
        double gp = -2.0 * ((x.t - s) - d.dot(w.velocity(s)));
        if (std::abs(gp) < 1e-300) break;
        double ds = g / gp;
        double s_new = std::clamp(s - ds, w.t_min(), w.t_max());
        if (s_new == s) break;
        s = s_new;
        if (std::abs(ds) < 1e-16 * (1.0 + std::abs(s))) break;
    }
    return s;
}

}  // namespace

double retarded_time(const NullWorldline& w, const FourVector& x, double tol) {
    double hi = std::min(x.t, w.t_max());
    double lo = w.t_min();
    if (!(hi > lo))
        throw NoIntersection("retarded_time: observation time outside causal domain");

    constexpr int kScanSteps = 1024;
    double step = (w.t_max() - w.t_min()) / double(kScanSteps);
    int n = std::max(1, int(std::ceil((hi - lo) / step)));
    double scale = 1.0 + x.norm_inf();

    std::vector<double> roots;
    double s_prev = lo, g_prev = light_cone_gap(w, x, lo);
    bool degenerate = std::abs(g_prev) < 1e-13 * scale;
    for (int i = 1; i <= n; ++i) {
        double s_cur = (i == n) ? hi : lo + i * step;
        double g_cur = light_cone_gap(w, x, s_cur);
        if (std::abs(g_cur) < 1e-13 * scale) degenerate = true;
        if ((g_prev > 0) != (g_cur > 0)) {
            // bisect to tol, then polish
            double a = s_prev, b = s_cur, ga = g_prev;
            while (b - a > tol * (1.0 + std::abs(a))) {
                double m = 0.5 * (a + b);
                double gm = light_cone_gap(w, x, m);
                if ((ga > 0) == (gm > 0)) {
                    a = m;
                    ga = gm;
                } else {
                    b = m;
                }
            }
            roots.push_back(polish_root(w, x, 0.5 * (a + b)));
        }
        s_prev = s_cur;
        g_prev = g_cur;
    }

    if (roots.empty()) {
        if (degenerate)
            throw SingularRay("retarded_time: observation point on the tangent null ray");
        throw NoIntersection("retarded_time: past light cone misses the worldline");
    }
    if (roots.size() > 1) {
        for (size_t i = 1; i < roots.size(); ++i)
            if (std::abs(roots[i] - roots[i - 1]) <= tol * (1.0 + std::abs(roots[i])))
                throw AmbiguousRoot("retarded_time: indistinguishable roots");
    }
    double s = roots.back();

    double causal = x.t - s;
    double r = retarded_distance_at(w, x, s);
    if (causal <= 0.0 || r < kRayGuardFraction * causal)
        throw SingularRay("retarded_time: retarded distance below the ray guard");
    return s;
}

RetardedFrame retarded_frame(const NullWorldline& w, const FourVector& x, double tol) {
    RetardedFrame fr;
    fr.s = retarded_time(w, x, tol);
    Vec3 z = w.position(fr.s);
    Vec3 v = w.velocity(fr.s);
    fr.R = FourVector(x.t - fr.s, x.spatial() - z);
    fr.u = FourVector(1.0, v);
    fr.r = -mdot(fr.R, fr.u);
    fr.k = fr.R / fr.r;
    fr.a = FourVector(0.0, w.acceleration(fr.s));
    fr.a_k = mdot(fr.a, fr.k);
    return fr;
}

FourVector lw_potential(double q, const RetardedFrame& fr) {
    if (fr.r < kRayGuardFraction * fr.R.t)
        throw RadiusUnderflow("lw_potential: retarded distance underflow");
    return fr.u * (q / fr.r);
}

EmTensor field_tensor(double q, const RetardedFrame& fr) {
    if (fr.r < kRayGuardFraction * fr.R.t)
        throw RadiusUnderflow("field_tensor: retarded distance underflow");
    FourVector a_cov = lower(fr.a), u_cov = lower(fr.u), k_cov = lower(fr.k);
    EmTensor f = EmTensor::wedge(a_cov, k_cov) + EmTensor::wedge(u_cov, k_cov) * fr.a_k;
    return f * (q / fr.r);
}

double singular_ray_distance(const NullWorldline& w, const FourVector& x) {
    double s;
    try {
        s = retarded_time(w, x);
    } catch (const SingularRay&) {
        return 0.0;
    }
    return retarded_distance_at(w, x, s);
}

std::array<double, 4> wave_operator_residual(double q, const NullWorldline& w,
                                             const FourVector& x, double h) {
    if (singular_ray_distance(w, x) < 10.0 * h)
        throw SingularRay("wave_operator_residual: stencil touches the singular ray");

    auto potential_at = [&](const FourVector& p) {
        return lw_potential(q, retarded_frame(w, p));
    };
    FourVector center = potential_at(x);
    std::array<double, 4> box{};
    for (int mu = 0; mu < 4; ++mu) {
        FourVector xp = x, xm = x;
        xp[mu] += h;
        xm[mu] -= h;
        FourVector second = (potential_at(xp) - center * 2.0 + potential_at(xm)) / (h * h);
        double sign = (mu == 0) ? -1.0 : 1.0;  // eta^{mu mu}
        for (int a = 0; a < 4; ++a) box[a] += sign * second[a];
    }
    return box;
}

}  // namespace nullcharge
