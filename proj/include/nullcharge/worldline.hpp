#ifndef NULLCHARGE_WORLDLINE_HPP
#define NULLCHARGE_WORLDLINE_HPP

#include <functional>
#include <string>
#include <vector>

#include "nullcharge/linalg.hpp"

namespace nullcharge {

/// Lab-time-parametrized lightlike trajectory: position z(t), unit-speed
/// velocity v(t) and acceleration a(t) with a.v = 0. The 4-velocity is
/// u = (1, v) and the 4-acceleration a = (0, a), so u.u = 0 along the line.
class NullWorldline {
public:
    enum class Kind { AnalyticCatalog, Sampled };

    using Evaluator = std::function<Vec3(double)>;

    NullWorldline(Kind kind, double t_min, double t_max,
                  Evaluator z, Evaluator v, Evaluator a);

    Vec3 position(double t) const { return z_(t); }
    Vec3 velocity(double t) const { return v_(t); }
    Vec3 acceleration(double t) const { return a_(t); }

    double t_min() const { return t_min_; }
    double t_max() const { return t_max_; }
    Kind kind() const { return kind_; }

    /// Straight line z(t) = origin + dir * t, |dir| = 1.
    static NullWorldline straight(const Vec3& origin, const Vec3& dir,
                                  double t_min, double t_max);

    /// Circle of radius 1/omega in the xy-plane traversed at unit speed:
    /// z(t) = rho (cos wt, sin wt, 0), rho w = 1.
    static NullWorldline circular(double omega, double t_min, double t_max);

    /// Cubic Hermite interpolation of strictly increasing samples (>= 4 rows);
    /// the velocity is renormalized to unit length after differentiation.
    static NullWorldline from_samples(std::vector<double> t, std::vector<Vec3> z);

    /// CSV with header `t,zx,zy,zz`.
    static NullWorldline from_csv(const std::string& path);

private:
    Kind kind_;
    double t_min_, t_max_;
    Evaluator z_, v_, a_;
};

}  // namespace nullcharge

#endif
