#include "nullcharge/eigen_motion.hpp"

#include <cmath>

#include "nullcharge/errors.hpp"

namespace nullcharge {

std::string_view to_string(FieldClass c) {
    switch (c) {
        case FieldClass::ZeroField: return "ZeroField";
        case FieldClass::NullField: return "NullField";
        case FieldClass::PureE: return "PureE";
        case FieldClass::PureB: return "PureB";
        case FieldClass::OrthogonalSubMagnetic: return "OrthogonalSubMagnetic";
        case FieldClass::OrthogonalSuperElectric: return "OrthogonalSuperElectric";
        case FieldClass::Generic: return "Generic";
    }
    return "?";
}

FieldClass classify_field(const FieldEB& f, double deg_tol) {
    double e2 = f.E.norm2(), b2 = f.B.norm2();
    double scale = e2 + b2;
    if (scale < deg_tol * deg_tol) return FieldClass::ZeroField;
    double dot = f.E.dot(f.B);
    if (std::abs(dot) >= deg_tol * scale) return FieldClass::Generic;
    if (b2 < deg_tol * scale) return FieldClass::PureE;
    if (e2 < deg_tol * scale) return FieldClass::PureB;
    double p = b2 - e2;
    if (std::abs(p) < deg_tol * scale) return FieldClass::NullField;
    return p > 0 ? FieldClass::OrthogonalSubMagnetic : FieldClass::OrthogonalSuperElectric;
}

bool capture_surface_test(const FieldEB& f, double deg_tol) {
    double e2 = f.E.norm2(), b2 = f.B.norm2();
    double scale = e2 + b2;
    if (scale < deg_tol * deg_tol) return false;
    return std::abs(f.E.dot(f.B)) < deg_tol * scale && b2 - e2 > deg_tol * scale;
}

std::vector<EigenSolution::Root> eigenvalue_roots(double q, const FieldEB& f, double deg_tol) {
    double e2 = f.E.norm2(), b2 = f.B.norm2();
    switch (classify_field(f, deg_tol)) {
        case FieldClass::ZeroField:
        case FieldClass::NullField:
            return {{0.0, 4}};
        case FieldClass::PureE: {
            double ed = std::abs(q) * std::sqrt(e2);
            return {{ed, 1}, {0.0, 2}, {-ed, 1}};
        }
        case FieldClass::PureB:
        case FieldClass::OrthogonalSubMagnetic:
            return {{0.0, 2}};
        case FieldClass::OrthogonalSuperElectric: {
            double ed = std::abs(q) * std::sqrt(e2 - b2);
            return {{ed, 1}, {0.0, 2}, {-ed, 1}};
        }
        case FieldClass::Generic: {
            double p = e2 - b2, dot = f.E.dot(f.B);
            double mu = std::sqrt(p * p + 4.0 * dot * dot);
            double ed = std::abs(q) * std::sqrt((p + mu) / 2.0);
            return {{ed, 1}, {-ed, 1}};
        }
    }
    return {};
}

EigenSolution admissible_velocities(double q, const FieldEB& f, double deg_tol) {
    EigenSolution sol;
    sol.field_class = classify_field(f, deg_tol);
    sol.roots = eigenvalue_roots(q, f, deg_tol);
    double e2 = f.E.norm2(), b2 = f.B.norm2();

    switch (sol.field_class) {
        case FieldClass::ZeroField:
            sol.velocity_unconstrained = true;
            break;
        case FieldClass::NullField:
            sol.velocities.push_back({0.0, f.E.cross(f.B) / b2});
            break;
        case FieldClass::PureE: {
            Vec3 n = f.E.normalized();
            double ed = q * std::sqrt(e2);
            sol.velocities.push_back({ed, n});
            sol.velocities.push_back({-ed, -n});
            break;
        }
        case FieldClass::PureB: {
            Vec3 n = f.B.normalized();
            sol.velocities.push_back({0.0, n});
            sol.velocities.push_back({0.0, -n});
            break;
        }
        case FieldClass::OrthogonalSubMagnetic: {
            Vec3 exb = f.E.cross(f.B);
            Vec3 bn = f.B * std::sqrt(b2 - e2);
            sol.velocities.push_back({0.0, (exb + bn) / b2});
            sol.velocities.push_back({0.0, (exb - bn) / b2});
            break;
        }
        case FieldClass::OrthogonalSuperElectric: {
            Vec3 exb = f.E.cross(f.B);
            Vec3 en = f.E * std::sqrt(e2 - b2);
            double ed = q * std::sqrt(e2 - b2);
            sol.velocities.push_back({ed, (exb + en) / e2});
            sol.velocities.push_back({-ed, (exb - en) / e2});
            break;
        }
        case FieldClass::Generic: {
            double p = e2 - b2, dot = f.E.dot(f.B);
            double mu = std::sqrt(p * p + 4.0 * dot * dot);
            double lam = std::sqrt((p + mu) / 2.0);
            double nu = std::sqrt((-p + mu) / 2.0);
            double sig = (e2 + b2 + mu) / 2.0;
            double kap = dot > 0 ? 1.0 : -1.0;
            Vec3 exb = f.E.cross(f.B);
            Vec3 w = f.E * lam + f.B * (kap * nu);
            sol.velocities.push_back({q * lam, (exb + w) / sig});
            sol.velocities.push_back({-q * lam, (exb - w) / sig});
            break;
        }
    }
    return sol;
}

double admissibility_residual(double q, const FieldEB& f, const Vec3& v) {
    double edot = q * f.E.dot(v);
    return (v * edot - f.E * q - v.cross(f.B) * q).norm();
}

std::vector<ParticleState> propagate(const ParticleState& state0, const FieldFunction& field,
                                     double t0, double t1, double dt, double admis_tol) {
    if (!(dt > 0) || !(t1 > t0))
        throw PreconditionViolation("propagate: need t1 > t0 and dt > 0");
    if (state0.e == 0.0)
        throw PreconditionViolation("propagate: multiplier e must be nonzero");
    if (std::abs(state0.v.norm() - 1.0) > 1e-9)
        throw PreconditionViolation("propagate: |v| != 1");

    const Vec3 v = state0.v;
    const double q = state0.q;
    auto pos = [&](double t) {
        return FourVector(t, state0.z.spatial() + v * (t - t0));
    };
    auto check = [&](double t) {
        FieldEB f = field(pos(t));
        double scale = 1.0 + std::abs(q) * std::sqrt(f.E.norm2() + f.B.norm2());
        if (admissibility_residual(q, f, v) > admis_tol * scale)
            throw RadiationDivergence("propagate: velocity no longer admissible at t=" +
                                      std::to_string(t));
        return f;
    };
    auto edot = [&](double t) { return q * field(pos(t)).E.dot(v); };

    check(t0);
    std::vector<ParticleState> states;
    states.push_back(state0);

    double t = t0, e = state0.e;
    while (t < t1) {
        double step = std::min(dt, t1 - t);
        double tn = t + step;
        // Simpson increment of de/dt = q E(z(t)).v
        double de = step / 6.0 * (edot(t) + 4.0 * edot(t + 0.5 * step) + edot(tn));
        double en = e + de;
        if (en == 0.0 || (en > 0) != (e > 0))
            throw MultiplierVanished("propagate: multiplier crossed zero near t=" +
                                     std::to_string(tn));
        check(tn);
        e = en;
        t = tn;
        states.push_back({pos(t), v, e, q});
    }
    return states;
}

std::vector<MapRecord> velocity_map(const FieldFunction& field, const std::vector<Vec3>& grid,
                                    double t, double q, double deg_tol) {
    std::vector<MapRecord> records;
    records.reserve(grid.size());
    for (const Vec3& pos : grid) {
        MapRecord rec;
        rec.pos = pos;
        rec.field = field(FourVector(t, pos));
        EigenSolution sol = admissible_velocities(q, rec.field, deg_tol);
        rec.field_class = sol.field_class;
        rec.capture = capture_surface_test(rec.field, deg_tol);
        rec.unconstrained = sol.velocity_unconstrained;
        if (!sol.velocities.empty()) {
            rec.edot_plus = sol.velocities[0].edot;
            rec.v_plus = sol.velocities[0].v;
        }
        if (sol.velocities.size() > 1) {
            rec.edot_minus = sol.velocities[1].edot;
            rec.v_minus = sol.velocities[1].v;
        }
        records.push_back(rec);
    }
    return records;
}

}  // namespace nullcharge
