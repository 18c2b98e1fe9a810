#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>

#include "nullcharge/errors.hpp"
#include "nullcharge/worldline.hpp"
#include "test_util.hpp"

using namespace nullcharge;

TEST_CASE("catalog worldlines satisfy the lightlike invariants") {
    auto straight = NullWorldline::straight({1, 2, 3}, Vec3{1, 1, 1}.normalized(), -5, 5);
    auto circular = NullWorldline::circular(2.0, -5, 5);
    for (const auto& w : {straight, circular}) {
        for (int i = 0; i <= 50; ++i) {
            double t = -5 + 10.0 * i / 50;
            CHECK(std::abs(w.velocity(t).norm() - 1.0) <= 1e-9);
            CHECK(std::abs(w.acceleration(t).dot(w.velocity(t))) <= 1e-9);
        }
    }
}

TEST_CASE("circular worldline has rho * omega = 1 and a^2 = omega^2") {
    double omega = 3.0;
    auto w = NullWorldline::circular(omega, 0, 10);
    CHECK(w.position(0.0).norm() == doctest::Approx(1.0 / omega));
    CHECK(w.acceleration(1.234).norm2() == doctest::Approx(omega * omega));
}

TEST_CASE("sampled worldline approximates its analytic source") {
    auto src = NullWorldline::circular(1.0, 0, 2 * M_PI);
    std::vector<double> t;
    std::vector<Vec3> z;
    for (int i = 0; i <= 400; ++i) {
        double ti = 2 * M_PI * i / 400;
        t.push_back(ti);
        z.push_back(src.position(ti));
    }
    auto w = NullWorldline::from_samples(t, z);
    CHECK(w.kind() == NullWorldline::Kind::Sampled);
    for (int i = 0; i <= 40; ++i) {
        double ti = 0.1 + (2 * M_PI - 0.2) * i / 40;
        CHECK((w.position(ti) - src.position(ti)).norm() <= 1e-4);
        CHECK(std::abs(w.velocity(ti).norm() - 1.0) <= 1e-12);  // renormalized
        CHECK((w.velocity(ti) - src.velocity(ti)).norm() <= 1e-3);
        CHECK(std::abs(w.acceleration(ti).dot(w.velocity(ti))) <= 1e-9);
    }
}

TEST_CASE("csv loader enforces the declared format") {
    const char* path = "wl_test.csv";
    {
        std::ofstream out(path);
        out << "t,zx,zy,zz\n";
        for (int i = 0; i <= 10; ++i) {
            double ti = 0.1 * i;
            out << ti << "," << ti << ",0,0\n";
        }
    }
    auto w = NullWorldline::from_csv(path);
    CHECK(w.t_min() == doctest::Approx(0.0));
    CHECK(w.t_max() == doctest::Approx(1.0));
    CHECK((w.velocity(0.5) - Vec3{1, 0, 0}).norm() <= 1e-12);
    std::remove(path);

    {
        std::ofstream out(path);
        out << "time,zx,zy,zz\n0,0,0,0\n";
    }
    CHECK_THROWS_AS(NullWorldline::from_csv(path), PreconditionViolation);
    std::remove(path);

    {
        std::ofstream out(path);
        out << "t,zx,zy,zz\n0,0,0,0\n1,1,0,0\n0.5,2,0,0\n2,3,0,0\n";
    }
    CHECK_THROWS_AS(NullWorldline::from_csv(path), PreconditionViolation);
    std::remove(path);
}

TEST_CASE("too few samples are rejected") {
    std::vector<double> t{0, 1, 2};
    std::vector<Vec3> z{{0, 0, 0}, {1, 0, 0}, {2, 0, 0}};
    CHECK_THROWS_AS(NullWorldline::from_samples(t, z), PreconditionViolation);
}
