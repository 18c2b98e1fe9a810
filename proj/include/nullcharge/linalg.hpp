#ifndef NULLCHARGE_LINALG_HPP
#define NULLCHARGE_LINALG_HPP

#include <array>
#include <cmath>

namespace nullcharge {

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;

    Vec3() = default;
    Vec3(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {}

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator-() const { return {-x, -y, -z}; }
    Vec3 operator*(double c) const { return {x * c, y * c, z * c}; }
    Vec3 operator/(double c) const { return {x / c, y / c, z / c}; }
    Vec3& operator+=(const Vec3& o) { x += o.x; y += o.y; z += o.z; return *this; }

    double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
    Vec3 cross(const Vec3& o) const {
        return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
    }
    double norm2() const { return dot(*this); }
    double norm() const { return std::sqrt(norm2()); }
    Vec3 normalized() const { double n = norm(); return {x / n, y / n, z / n}; }

    double operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }
    double& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }
};

inline Vec3 operator*(double c, const Vec3& v) { return v * c; }

/// Spacetime vector under the fixed metric diag(-1,1,1,1), c = 1.
struct FourVector {
    double t = 0.0, x = 0.0, y = 0.0, z = 0.0;

    FourVector() = default;
    FourVector(double t_, double x_, double y_, double z_) : t(t_), x(x_), y(y_), z(z_) {}
    FourVector(double t_, const Vec3& s) : t(t_), x(s.x), y(s.y), z(s.z) {}

    Vec3 spatial() const { return {x, y, z}; }

    FourVector operator+(const FourVector& o) const { return {t + o.t, x + o.x, y + o.y, z + o.z}; }
    FourVector operator-(const FourVector& o) const { return {t - o.t, x - o.x, y - o.y, z - o.z}; }
    FourVector operator-() const { return {-t, -x, -y, -z}; }
    FourVector operator*(double c) const { return {t * c, x * c, y * c, z * c}; }
    FourVector operator/(double c) const { return {t / c, x / c, y / c, z / c}; }

    double operator[](int i) const { return i == 0 ? t : (i == 1 ? x : (i == 2 ? y : z)); }
    double& operator[](int i) { return i == 0 ? t : (i == 1 ? x : (i == 2 ? y : z)); }

    double norm_inf() const {
        return std::max(std::max(std::abs(t), std::abs(x)), std::max(std::abs(y), std::abs(z)));
    }
    /// Euclidean norm of all four components (scale measure, not Lorentz).
    double norm_euclid() const { return std::sqrt(t * t + x * x + y * y + z * z); }
};

inline FourVector operator*(double c, const FourVector& v) { return v * c; }

/// Minkowski scalar product, signature (-,+,+,+).
inline double mdot(const FourVector& a, const FourVector& b) {
    return -a.t * b.t + a.x * b.x + a.y * b.y + a.z * b.z;
}

/// Index lowering/raising: flips the sign of the time component.
inline FourVector lower(const FourVector& v) { return {-v.t, v.x, v.y, v.z}; }

inline bool is_null(const FourVector& v, double tol = 1e-12) {
    double s = v.norm_inf();
    return std::abs(mdot(v, v)) <= tol * s * s;
}

struct Mat3 {
    std::array<std::array<double, 3>, 3> m{};

    static Mat3 identity() {
        Mat3 r;
        for (int i = 0; i < 3; ++i) r.m[i][i] = 1.0;
        return r;
    }
    Vec3 operator*(const Vec3& v) const {
        Vec3 r;
        for (int i = 0; i < 3; ++i)
            r[i] = m[i][0] * v.x + m[i][1] * v.y + m[i][2] * v.z;
        return r;
    }
    Mat3 operator*(const Mat3& o) const {
        Mat3 r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                double s = 0;
                for (int k = 0; k < 3; ++k) s += m[i][k] * o.m[k][j];
                r.m[i][j] = s;
            }
        return r;
    }
    Mat3 transposed() const {
        Mat3 r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) r.m[i][j] = m[j][i];
        return r;
    }
    double det() const {
        return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
             - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
             + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    }
};

struct Mat4 {
    std::array<std::array<double, 4>, 4> m{};

    static Mat4 identity() {
        Mat4 r;
        for (int i = 0; i < 4; ++i) r.m[i][i] = 1.0;
        return r;
    }
    /// diag(-1,1,1,1)
    static Mat4 metric() {
        Mat4 r = identity();
        r.m[0][0] = -1.0;
        return r;
    }
    FourVector operator*(const FourVector& v) const {
        FourVector r;
        for (int i = 0; i < 4; ++i) {
            double s = 0;
            for (int j = 0; j < 4; ++j) s += m[i][j] * v[j];
            r[i] = s;
        }
        return r;
    }
    Mat4 operator*(const Mat4& o) const {
        Mat4 r;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                double s = 0;
                for (int k = 0; k < 4; ++k) s += m[i][k] * o.m[k][j];
                r.m[i][j] = s;
            }
        return r;
    }
    Mat4 operator*(double c) const {
        Mat4 r;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) r.m[i][j] = m[i][j] * c;
        return r;
    }
    Mat4 operator+(const Mat4& o) const {
        Mat4 r;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) r.m[i][j] = m[i][j] + o.m[i][j];
        return r;
    }
    Mat4 operator-(const Mat4& o) const {
        Mat4 r;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) r.m[i][j] = m[i][j] - o.m[i][j];
        return r;
    }
    Mat4 transposed() const {
        Mat4 r;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) r.m[i][j] = m[j][i];
        return r;
    }
    double frobenius() const {
        double s = 0;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) s += m[i][j] * m[i][j];
        return std::sqrt(s);
    }
    double max_abs() const {
        double s = 0;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) s = std::max(s, std::abs(m[i][j]));
        return s;
    }
};

}  // namespace nullcharge

#endif
