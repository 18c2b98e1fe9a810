#ifndef NULLCHARGE_FIELD_CATALOG_HPP
#define NULLCHARGE_FIELD_CATALOG_HPP

#include <string>
#include <vector>

#include "nullcharge/eigen_motion.hpp"
#include "nullcharge/linalg.hpp"

namespace nullcharge {

/// Constructor parameters for the catalog field configurations. Kind-specific
/// members; unused ones are ignored.
struct FieldSpec {
    enum class Kind { PlaneWave, UniformE, UniformB, CrossedEB, RotatingDipole, Zero };

    Kind kind = Kind::Zero;

    // PlaneWave: linearly polarized, propagating along +z
    double amplitude = 0.0;
    double omega = 0.0;

    // UniformE / UniformB / CrossedEB
    Vec3 E0, B0;

    // RotatingDipole: snapshot of a magnetic dipole rotating about z-hat,
    // with the rigid-corotation interior electric field E = -(Omega x r) x B.
    Vec3 moment;
    double omega_star = 0.0;
    double t_snapshot = 0.0;
    double length_scale = 1.0;
    double r_core = 0.0;  // 0 means the default 0.05 * length_scale
};

/// Reentrant field function for the given spec. The dipole field throws
/// DipoleCoreViolation inside the core radius.
FieldFunction make_field(const FieldSpec& spec);

/// Superposition of co-propagating (+z) linearly polarized plane waves
/// given as (amplitude, omega, phase) triples.
struct PlaneWaveComponent {
    double amplitude;
    double omega;
    double phase;
};
FieldFunction superpose_plane_waves(std::vector<PlaneWaveComponent> components);

/// Parse the CLI JSON form {"kind": "...", "params": {...}}.
FieldSpec parse_field_spec(const std::string& json_text);

}  // namespace nullcharge

#endif
