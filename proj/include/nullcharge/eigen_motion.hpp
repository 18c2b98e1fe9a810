#ifndef NULLCHARGE_EIGEN_MOTION_HPP
#define NULLCHARGE_EIGEN_MOTION_HPP

#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "nullcharge/field_tensor.hpp"
#include "nullcharge/linalg.hpp"

namespace nullcharge {

enum class FieldClass {
    ZeroField,
    NullField,
    PureE,
    PureB,
    OrthogonalSubMagnetic,
    OrthogonalSuperElectric,
    Generic,
};

std::string_view to_string(FieldClass c);

/// Eigen-structure of the field tensor acting on null velocities: the real
/// roots edot of the quartic
///   edot^4 + edot^2 q^2 (B^2 - E^2) - q^4 (E.B)^2 = 0
/// and the admissible unit velocities attached to them.
struct EigenSolution {
    struct Root {
        double edot;
        int multiplicity;
    };
    struct Branch {
        double edot;
        Vec3 v;
    };
    std::vector<Root> roots;
    std::vector<Branch> velocities;
    FieldClass field_class = FieldClass::ZeroField;
    /// Zero field: any direction solves the equation of motion.
    bool velocity_unconstrained = false;
};

/// All real roots of the eigenvalue quartic with multiplicities, in
/// descending order of edot.
std::vector<EigenSolution::Root> eigenvalue_roots(double q, const FieldEB& f,
                                                  double deg_tol = 1e-10);

/// Classification plus admissible velocities per field class.
EigenSolution admissible_velocities(double q, const FieldEB& f, double deg_tol = 1e-10);

/// Relative-threshold classification with scale S = E^2 + B^2.
FieldClass classify_field(const FieldEB& f, double deg_tol = 1e-10);

/// True iff E.B = 0 (within tolerance) and E^2 < B^2 strictly beyond it:
/// the capture surface of the pulsar-magnetosphere velocity law.
bool capture_surface_test(const FieldEB& f, double deg_tol = 1e-10);

/// Particle state: null 4-velocity (1, v), |v| = 1, einbein e != 0, and
/// 4-momentum p = e (1, v).
struct ParticleState {
    FourVector z;
    Vec3 v;
    double e = 0.0;
    double q = 0.0;
    FourVector p() const { return FourVector(1.0, v) * e; }
};

using FieldFunction = std::function<FieldEB(const FourVector&)>;

/// Straight-line propagation z(t) = z0 + v (t - t0) with v held exactly
/// constant; e integrates q E.v by per-step Simpson. Admissibility of v in the
/// local field is monitored at every step and its failure throws
/// RadiationDivergence; a sign change of e throws MultiplierVanished.
std::vector<ParticleState> propagate(const ParticleState& state0, const FieldFunction& field,
                                     double t0, double t1, double dt, double admis_tol);

/// Residual of the Lorentz-force balance edot v = qE + q v x B with
/// edot = q(E.v); zero exactly when v is an admissible eigenvector.
double admissibility_residual(double q, const FieldEB& f, const Vec3& v);

struct MapRecord {
    Vec3 pos;
    FieldEB field;
    FieldClass field_class;
    bool capture = false;
    bool unconstrained = false;
    std::optional<double> edot_plus, edot_minus;
    std::optional<Vec3> v_plus, v_minus;
};

/// Pointwise eigen-analysis of a field over a spatial grid at time t.
std::vector<MapRecord> velocity_map(const FieldFunction& field, const std::vector<Vec3>& grid,
                                    double t, double q, double deg_tol = 1e-10);

}  // namespace nullcharge

#endif
