#include <doctest.h>

#include <cmath>

#include "nullcharge/errors.hpp"
#include "nullcharge/field_catalog.hpp"
#include "test_util.hpp"

using namespace nullcharge;

TEST_CASE("plane wave satisfies the crossed-field relations everywhere") {
    FieldSpec spec;
    spec.kind = FieldSpec::Kind::PlaneWave;
    spec.amplitude = 1.5;
    spec.omega = 2.0;
    auto field = make_field(spec);

    testutil::Rng rng(61);
    for (int i = 0; i < 200; ++i) {
        FourVector x(rng.uniform(-5, 5), rng.vec3(-5, 5));
        FieldEB f = field(x);
        CHECK(f.E.x == f.B.y);
        CHECK(f.E.y == -f.B.x);
        CHECK(f.E.z == 0.0);
        CHECK(f.B.z == 0.0);
        auto [i1, i2] = em_invariants(f);
        CHECK(std::abs(i1) <= 1e-14);
        CHECK(std::abs(i2) <= 1e-14);
    }

    FieldEB at_zero = field({0, 0, 0, 0});
    CHECK(at_zero.E.x == doctest::Approx(1.5));
    CHECK(at_zero.B.y == doctest::Approx(1.5));
}

TEST_CASE("plane wave admits motion along +z; phase zeros are free points") {
    FieldSpec spec;
    spec.kind = FieldSpec::Kind::PlaneWave;
    spec.amplitude = 1.0;
    spec.omega = 1.0;
    auto field = make_field(spec);

    testutil::Rng rng(62);
    for (int i = 0; i < 100; ++i) {
        FourVector x(rng.uniform(-5, 5), rng.vec3(-5, 5));
        FieldEB f = field(x);
        EigenSolution sol = admissible_velocities(1.0, f);
        if (sol.field_class == FieldClass::ZeroField) {
            CHECK(sol.velocity_unconstrained);
            continue;
        }
        REQUIRE(sol.field_class == FieldClass::NullField);
        CHECK((sol.velocities[0].v - Vec3{0, 0, 1}).norm() <= 1e-12);
    }

    // exact phase zero: t - z = pi/2
    FieldEB zero_phase = field({M_PI / 2, 0, 0, 0});
    CHECK(classify_field(zero_phase) == FieldClass::ZeroField);
    CHECK(admissible_velocities(1.0, zero_phase).velocity_unconstrained);
}

TEST_CASE("co-propagating superposition stays admissible along +z") {
    auto field = superpose_plane_waves({{1.0, 1.0, 0.0}, {0.7, 3.0, 1.1}, {0.2, 0.5, -0.4}});
    testutil::Rng rng(63);
    for (int i = 0; i < 100; ++i) {
        FourVector x(rng.uniform(-5, 5), rng.vec3(-5, 5));
        EigenSolution sol = admissible_velocities(1.0, field(x));
        if (sol.field_class == FieldClass::ZeroField) continue;
        REQUIRE(sol.field_class == FieldClass::NullField);
        CHECK((sol.velocities[0].v - Vec3{0, 0, 1}).norm() <= 1e-12);
    }
}

TEST_CASE("uniform fields return their constants") {
    FieldSpec spec;
    spec.kind = FieldSpec::Kind::UniformB;
    spec.B0 = {0, 0, 1};
    FieldEB f = make_field(spec)({3, 1, -2, 5});
    CHECK(f.E.norm() == 0.0);
    CHECK((f.B - Vec3{0, 0, 1}).norm() == 0.0);
}

TEST_CASE("dipole snapshot: divergence-free B away from the core") {
    FieldSpec spec;
    spec.kind = FieldSpec::Kind::RotatingDipole;
    spec.moment = {0.2, -0.1, 1.0};
    spec.omega_star = 1.3;
    spec.t_snapshot = 0.7;
    auto field = make_field(spec);

    testutil::Rng rng(64);
    auto div_b = [&](const Vec3& p, double h) {
        double d = 0;
        for (int i = 0; i < 3; ++i) {
            Vec3 pp = p, pm = p;
            pp[i] += h;
            pm[i] -= h;
            d += (field(FourVector(0, pp)).B[i] - field(FourVector(0, pm)).B[i]) / (2 * h);
        }
        return std::abs(d);
    };
    for (int i = 0; i < 50; ++i) {
        Vec3 p = rng.unit_vec3() * rng.uniform(0.5, 3.0);
        double d1 = div_b(p, 1e-3), d2 = div_b(p, 5e-4);
        double scale = field(FourVector(0, p)).B.norm() / p.norm();
        CHECK(d1 <= 1e-3 * scale + 1e-10);
        // second-order decay, allowing rounding floor
        if (d1 > 1e-8 * scale) CHECK(d2 <= 0.4 * d1 + 1e-10);
    }
}

TEST_CASE("dipole core is guarded") {
    FieldSpec spec;
    spec.kind = FieldSpec::Kind::RotatingDipole;
    spec.moment = {0, 0, 1};
    spec.length_scale = 2.0;
    auto field = make_field(spec);
    CHECK_THROWS_AS(field({0, 0.05, 0, 0}), DipoleCoreViolation);  // default core 0.1
    CHECK_NOTHROW(field({0, 0.2, 0, 0}));
}

TEST_CASE("dipole snapshot rotates the moment about z") {
    FieldSpec spec;
    spec.kind = FieldSpec::Kind::RotatingDipole;
    spec.moment = {1, 0, 0};
    spec.omega_star = M_PI / 2;
    spec.t_snapshot = 1.0;  // moment rotated to +y
    auto field = make_field(spec);
    // on the +y axis the field of a +y moment is 2m/(4 pi r^3) along +y
    FieldEB f = field({0, 0, 2, 0});
    CHECK(f.B.y == doctest::Approx(2.0 / (4 * M_PI * 8)).epsilon(1e-12));
    CHECK(std::abs(f.B.x) <= 1e-15);
}

TEST_CASE("parse_field_spec") {
    FieldSpec pw = parse_field_spec(R"({"kind":"PlaneWave","params":{"amplitude":2.0,"omega":0.5}})");
    CHECK(pw.kind == FieldSpec::Kind::PlaneWave);
    CHECK(pw.amplitude == 2.0);
    CHECK(pw.omega == 0.5);

    FieldSpec ue = parse_field_spec(R"({"kind":"UniformE","params":{"E":[1,2,3]}})");
    CHECK(ue.E0.y == 2.0);

    FieldSpec dip = parse_field_spec(
        R"({"kind":"RotatingDipole","params":{"moment":[0,0,1],"omega_star":2.0}})");
    CHECK(dip.omega_star == 2.0);
    CHECK(dip.length_scale == 1.0);

    CHECK_THROWS_AS(parse_field_spec("{"), PreconditionViolation);
    CHECK_THROWS_AS(parse_field_spec(R"({"kind":"Vortex"})"), PreconditionViolation);
    CHECK_THROWS_AS(parse_field_spec(R"({"kind":"PlaneWave","params":{}})"),
                    PreconditionViolation);
}
