#include "nullcharge/worldline.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <memory>
#include <sstream>

#include "nullcharge/errors.hpp"

namespace nullcharge {

NullWorldline::NullWorldline(Kind kind, double t_min, double t_max,
                             Evaluator z, Evaluator v, Evaluator a)
    : kind_(kind), t_min_(t_min), t_max_(t_max),
      z_(std::move(z)), v_(std::move(v)), a_(std::move(a)) {
    if (!(t_min_ < t_max_))
        throw PreconditionViolation("NullWorldline: empty domain");
}

NullWorldline NullWorldline::straight(const Vec3& origin, const Vec3& dir,
                                      double t_min, double t_max) {
    if (std::abs(dir.norm() - 1.0) > 1e-9)
        throw PreconditionViolation("straight worldline: |dir| != 1");
    return NullWorldline(
        Kind::AnalyticCatalog, t_min, t_max,
        [origin, dir](double t) { return origin + dir * t; },
        [dir](double) { return dir; },
        [](double) { return Vec3{}; });
}

NullWorldline NullWorldline::circular(double omega, double t_min, double t_max) {
    if (!(omega > 0))
        throw PreconditionViolation("circular worldline: omega must be positive");
    double rho = 1.0 / omega;  // unit speed
    return NullWorldline(
        Kind::AnalyticCatalog, t_min, t_max,
        [rho, omega](double t) { return Vec3{rho * std::cos(omega * t), rho * std::sin(omega * t), 0.0}; },
        [omega](double t) { return Vec3{-std::sin(omega * t), std::cos(omega * t), 0.0}; },
        [omega](double t) { return Vec3{-omega * std::cos(omega * t), -omega * std::sin(omega * t), 0.0}; });
}

namespace {

struct HermiteTable {
    std::vector<double> t;
    std::vector<Vec3> z;
    std::vector<Vec3> m;  // tangents dz/dt at nodes

    int segment(double x) const {
        auto it = std::upper_bound(t.begin(), t.end(), x);
        int i = int(it - t.begin()) - 1;
        return std::clamp(i, 0, int(t.size()) - 2);
    }

    Vec3 eval(double x) const {
        int i = segment(x);
        double h = t[i + 1] - t[i];
        double u = (x - t[i]) / h;
        double u2 = u * u, u3 = u2 * u;
        double h00 = 2 * u3 - 3 * u2 + 1, h10 = u3 - 2 * u2 + u;
        double h01 = -2 * u3 + 3 * u2, h11 = u3 - u2;
        return z[i] * h00 + m[i] * (h * h10) + z[i + 1] * h01 + m[i + 1] * (h * h11);
    }

    Vec3 deriv(double x) const {
        int i = segment(x);
        double h = t[i + 1] - t[i];
        double u = (x - t[i]) / h;
        double u2 = u * u;
        double d00 = (6 * u2 - 6 * u) / h, d10 = 3 * u2 - 4 * u + 1;
        double d01 = (-6 * u2 + 6 * u) / h, d11 = 3 * u2 - 2 * u;
        return z[i] * d00 + m[i] * d10 + z[i + 1] * d01 + m[i + 1] * d11;
    }
};

}  // namespace

NullWorldline NullWorldline::from_samples(std::vector<double> t, std::vector<Vec3> z) {
    if (t.size() < 4 || t.size() != z.size())
        throw PreconditionViolation("sampled worldline: need >= 4 aligned rows");
    for (size_t i = 1; i < t.size(); ++i)
        if (!(t[i] > t[i - 1]))
            throw PreconditionViolation("sampled worldline: t must be strictly increasing");

    auto tab = std::make_shared<HermiteTable>();
    tab->t = std::move(t);
    tab->z = std::move(z);
    size_t n = tab->t.size();
    tab->m.resize(n);
    tab->m[0] = (tab->z[1] - tab->z[0]) / (tab->t[1] - tab->t[0]);
    tab->m[n - 1] = (tab->z[n - 1] - tab->z[n - 2]) / (tab->t[n - 1] - tab->t[n - 2]);
    for (size_t i = 1; i + 1 < n; ++i)
        tab->m[i] = (tab->z[i + 1] - tab->z[i - 1]) / (tab->t[i + 1] - tab->t[i - 1]);

    double t_min = tab->t.front(), t_max = tab->t.back();
    double h_fd = 1e-4 * (t_max - t_min) / double(n - 1);

    auto vel = [tab](double x) {
        Vec3 d = tab->deriv(x);
        double nrm = d.norm();
        if (nrm < 1e-300)
            throw PreconditionViolation("sampled worldline: vanishing tangent");
        return d / nrm;
    };
    auto acc = [tab, vel, t_min, t_max, h_fd](double x) {
        double lo = std::max(t_min, x - h_fd), hi = std::min(t_max, x + h_fd);
        Vec3 a = (vel(hi) - vel(lo)) / (hi - lo);
        Vec3 v = vel(x);
        return a - v * a.dot(v);  // keep a.v = 0
    };
    return NullWorldline(Kind::Sampled, t_min, t_max,
                         [tab](double x) { return tab->eval(x); }, vel, acc);
}

NullWorldline NullWorldline::from_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw PreconditionViolation("worldline csv: cannot open " + path);
    std::string line;
    if (!std::getline(in, line))
        throw PreconditionViolation("worldline csv: empty file");
    // tolerate trailing whitespace/CR in the header
    std::string hdr = line;
    while (!hdr.empty() && (hdr.back() == '\r' || hdr.back() == ' ')) hdr.pop_back();
    if (hdr != "t,zx,zy,zz")
        throw PreconditionViolation("worldline csv: expected header t,zx,zy,zz");
    std::vector<double> t;
    std::vector<Vec3> z;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ss(line);
        double vals[4];
        char comma;
        for (int i = 0; i < 4; ++i) {
            if (!(ss >> vals[i]))
                throw PreconditionViolation("worldline csv: bad row '" + line + "'");
            if (i < 3 && !(ss >> comma))
                throw PreconditionViolation("worldline csv: bad row '" + line + "'");
        }
        t.push_back(vals[0]);
        z.emplace_back(vals[1], vals[2], vals[3]);
    }
    return from_samples(std::move(t), std::move(z));
}

}  // namespace nullcharge
