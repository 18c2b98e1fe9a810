#include <doctest.h>

#include "nullcharge/linalg.hpp"
#include "test_util.hpp"

using namespace nullcharge;

TEST_CASE("mdot on reference vectors") {
    CHECK(mdot({1, 0, 0, 1}, {1, 0, 0, 1}) == 0.0);
    CHECK(mdot({1, 0, 0, 0}, {1, 0, 0, 0}) == -1.0);
    CHECK(mdot({1, 1, 0, 0}, {1, 0, 1, 0}) == -1.0);
}

TEST_CASE("mdot is symmetric and bilinear") {
    testutil::Rng rng(11);
    for (int i = 0; i < 200; ++i) {
        FourVector a(rng.uniform(-2, 2), rng.vec3(-2, 2));
        FourVector b(rng.uniform(-2, 2), rng.vec3(-2, 2));
        FourVector c(rng.uniform(-2, 2), rng.vec3(-2, 2));
        double al = rng.uniform(-3, 3);
        CHECK(mdot(a, b) == doctest::Approx(mdot(b, a)).epsilon(1e-14));
        CHECK(mdot(a * al + c, b) ==
              doctest::Approx(al * mdot(a, b) + mdot(c, b)).epsilon(1e-12));
    }
}

TEST_CASE("lightlike (1, n) vectors are null to machine precision") {
    testutil::Rng rng(12);
    for (int i = 0; i < 500; ++i) {
        FourVector v(1.0, rng.unit_vec3());
        CHECK(std::abs(mdot(v, v)) <= 1e-14);
        CHECK(is_null(v, 1e-12));
    }
}

TEST_CASE("lower flips only the time component") {
    FourVector v(2, 3, -4, 5);
    FourVector l = lower(v);
    CHECK(l.t == -2.0);
    CHECK(l.x == 3.0);
    CHECK(mdot(v, v) == doctest::Approx(l.t * v.t + l.x * v.x + l.y * v.y + l.z * v.z));
}
