#include "nullcharge/field_catalog.hpp"

#include <cmath>

#include <json.hpp>

#include "nullcharge/errors.hpp"

namespace nullcharge {

namespace {

bool finite3(const Vec3& v) {
    return std::isfinite(v.x) && std::isfinite(v.y) && std::isfinite(v.z);
}

Vec3 dipole_b(const Vec3& m, const Vec3& x) {
    double r = x.norm();
    Vec3 n = x / r;
    return (n * (3.0 * n.dot(m)) - m) / (4.0 * M_PI * r * r * r);
}

}  // namespace

FieldFunction make_field(const FieldSpec& spec) {
    switch (spec.kind) {
        case FieldSpec::Kind::Zero:
            return [](const FourVector&) { return FieldEB{}; };
        case FieldSpec::Kind::PlaneWave: {
            if (!std::isfinite(spec.amplitude) || !std::isfinite(spec.omega))
                throw PreconditionViolation("PlaneWave: non-finite parameters");
            double e0 = spec.amplitude, om = spec.omega;
            return [e0, om](const FourVector& x) {
                double c = e0 * std::cos(om * (x.t - x.z));
                return FieldEB({c, 0, 0}, {0, c, 0});
            };
        }
        case FieldSpec::Kind::UniformE: {
            if (!finite3(spec.E0)) throw PreconditionViolation("UniformE: non-finite E0");
            Vec3 e = spec.E0;
            return [e](const FourVector&) { return FieldEB(e, {}); };
        }
        case FieldSpec::Kind::UniformB: {
            if (!finite3(spec.B0)) throw PreconditionViolation("UniformB: non-finite B0");
            Vec3 b = spec.B0;
            return [b](const FourVector&) { return FieldEB({}, b); };
        }
        case FieldSpec::Kind::CrossedEB: {
            if (!finite3(spec.E0) || !finite3(spec.B0))
                throw PreconditionViolation("CrossedEB: non-finite fields");
            Vec3 e = spec.E0, b = spec.B0;
            return [e, b](const FourVector&) { return FieldEB(e, b); };
        }
        case FieldSpec::Kind::RotatingDipole: {
            if (!finite3(spec.moment) || !std::isfinite(spec.omega_star) ||
                !std::isfinite(spec.t_snapshot) || !(spec.length_scale > 0))
                throw PreconditionViolation("RotatingDipole: bad parameters");
            double phase = spec.omega_star * spec.t_snapshot;
            double cp = std::cos(phase), sp = std::sin(phase);
            Vec3 m{cp * spec.moment.x - sp * spec.moment.y,
                   sp * spec.moment.x + cp * spec.moment.y, spec.moment.z};
            Vec3 omega_vec{0, 0, spec.omega_star};
            double r_core = spec.r_core > 0 ? spec.r_core : 0.05 * spec.length_scale;
            return [m, omega_vec, r_core](const FourVector& x) {
                Vec3 pos = x.spatial();
                if (pos.norm() < r_core)
                    throw DipoleCoreViolation("RotatingDipole: point inside core radius");
                Vec3 b = dipole_b(m, pos);
                Vec3 e = -(omega_vec.cross(pos)).cross(b);  // rigid corotation
                return FieldEB(e, b);
            };
        }
    }
    throw PreconditionViolation("make_field: unknown kind");
}

FieldFunction superpose_plane_waves(std::vector<PlaneWaveComponent> components) {
    return [components = std::move(components)](const FourVector& x) {
        double c = 0.0;
        for (const auto& w : components)
            c += w.amplitude * std::cos(w.omega * (x.t - x.z) + w.phase);
        return FieldEB({c, 0, 0}, {0, c, 0});
    };
}

namespace {

Vec3 vec3_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.size() != 3)
        throw PreconditionViolation("field spec: expected a 3-element array");
    return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

}  // namespace

FieldSpec parse_field_spec(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw PreconditionViolation(std::string("field spec: invalid JSON: ") + e.what());
    }
    if (!j.contains("kind"))
        throw PreconditionViolation("field spec: missing 'kind'");
    std::string kind = j["kind"].get<std::string>();
    nlohmann::json p = j.value("params", nlohmann::json::object());

    FieldSpec spec;
    try {
        if (kind == "Zero") {
            spec.kind = FieldSpec::Kind::Zero;
        } else if (kind == "PlaneWave") {
            spec.kind = FieldSpec::Kind::PlaneWave;
            spec.amplitude = p.at("amplitude").get<double>();
            spec.omega = p.at("omega").get<double>();
        } else if (kind == "UniformE") {
            spec.kind = FieldSpec::Kind::UniformE;
            spec.E0 = vec3_from_json(p.at("E"));
        } else if (kind == "UniformB") {
            spec.kind = FieldSpec::Kind::UniformB;
            spec.B0 = vec3_from_json(p.at("B"));
        } else if (kind == "CrossedEB") {
            spec.kind = FieldSpec::Kind::CrossedEB;
            spec.E0 = vec3_from_json(p.at("E"));
            spec.B0 = vec3_from_json(p.at("B"));
        } else if (kind == "RotatingDipole") {
            spec.kind = FieldSpec::Kind::RotatingDipole;
            spec.moment = vec3_from_json(p.at("moment"));
            spec.omega_star = p.at("omega_star").get<double>();
            spec.t_snapshot = p.value("t_snapshot", 0.0);
            spec.length_scale = p.value("length_scale", 1.0);
            spec.r_core = p.value("r_core", 0.0);
        } else {
            throw PreconditionViolation("field spec: unknown kind '" + kind + "'");
        }
    } catch (const nlohmann::json::exception& e) {
        throw PreconditionViolation(std::string("field spec: ") + e.what());
    }
    return spec;
}

}  // namespace nullcharge
