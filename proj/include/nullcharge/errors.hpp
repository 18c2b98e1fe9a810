#ifndef NULLCHARGE_ERRORS_HPP
#define NULLCHARGE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace nullcharge {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PreconditionViolation : Error { using Error::Error; };

// retarded_field
struct NoIntersection : Error { using Error::Error; };
struct SingularRay : Error { using Error::Error; };
struct AmbiguousRoot : Error { using Error::Error; };
struct RadiusUnderflow : Error { using Error::Error; };

// quadrature
struct QuadratureFailure : Error { using Error::Error; };

// eigen_motion
struct RadiationDivergence : Error { using Error::Error; };
struct MultiplierVanished : Error { using Error::Error; };

// field_catalog
struct DipoleCoreViolation : Error { using Error::Error; };

// conformal
struct DegenerateD : Error { using Error::Error; };
struct LightConePoint : Error { using Error::Error; };

}  // namespace nullcharge

#endif
