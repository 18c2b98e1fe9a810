#include <doctest.h>

#include <cmath>

#include "nullcharge/errors.hpp"
#include "nullcharge/radiation.hpp"
#include "nullcharge/retarded.hpp"
#include "test_util.hpp"

using namespace nullcharge;

namespace {

// Independent bisection oracle on (x0 - s)^2 = |x - z(s)|^2.
double bisect_retarded(const NullWorldline& w, const FourVector& x) {
    auto g = [&](double s) {
        return (x.t - s) * (x.t - s) - (x.spatial() - w.position(s)).norm2();
    };
    double a = w.t_min(), b = std::min(x.t, w.t_max());
    for (int i = 0; i < 200; ++i) {
        double m = 0.5 * (a + b);
        if ((g(a) > 0) == (g(m) > 0))
            a = m;
        else
            b = m;
    }
    return 0.5 * (a + b);
}

NullWorldline z_axis_line() {
    return NullWorldline::straight({0, 0, 0}, {0, 0, 1}, -100, 100);
}

}  // namespace

TEST_CASE("retarded_time against the bisection oracle") {
    auto w = z_axis_line();
    FourVector x1(2, 1, 0, 0);
    CHECK(retarded_time(w, x1) == doctest::Approx(0.75).epsilon(1e-12));
    CHECK(retarded_time(w, x1) == doctest::Approx(bisect_retarded(w, x1)).epsilon(1e-10));

    FourVector x2(1, 0, 0, 0.5);
    CHECK(retarded_time(w, x2) == doctest::Approx(0.75).epsilon(1e-12));
    CHECK(retarded_time(w, x2) == doctest::Approx(bisect_retarded(w, x2)).epsilon(1e-10));
}

TEST_CASE("point on the forward tangent ray reports SingularRay") {
    auto w = z_axis_line();
    CHECK_THROWS_AS(retarded_time(w, {2, 0, 0, 2}), SingularRay);
    // ahead of the charge on the same ray nothing has arrived yet
    CHECK_THROWS_AS(retarded_time(w, {2, 0, 0, 2.0000000001}), NoIntersection);
    // circular worldline: the tangent ray leaving z(0) = (1,0,0) along +y hits
    // (t, 1, t, 0) with a vanishing retarded distance
    auto c = NullWorldline::circular(1.0, -10, 10);
    CHECK_THROWS_AS(retarded_time(c, {1, 1, 1, 0}), SingularRay);
}

TEST_CASE("point outside the causal domain reports NoIntersection") {
    auto w = NullWorldline::straight({0, 0, 0}, {0, 0, 1}, -1, 1);
    CHECK_THROWS_AS(retarded_time(w, {-2, 1, 0, 0}, 1e-12), NoIntersection);
    // root would lie beyond t_max
    CHECK_THROWS_AS(retarded_time(w, {10, 0.1, 0, 1.95}, 1e-12), NoIntersection);
}

TEST_CASE("retarded_frame reference point") {
    auto w = z_axis_line();
    RetardedFrame fr = retarded_frame(w, {2, 1, 0, 0});
    CHECK(fr.s == doctest::Approx(0.75).epsilon(1e-12));
    CHECK(fr.r == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(fr.k.t == doctest::Approx(5.0 / 8).epsilon(1e-12));
    CHECK(fr.k.x == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(fr.k.y == doctest::Approx(0.0));
    CHECK(fr.k.z == doctest::Approx(-3.0 / 8).epsilon(1e-12));
    CHECK(std::abs(mdot(fr.k, fr.u) + 1.0) <= 1e-12);
}

TEST_CASE("retarded frame invariants on random points") {
    testutil::Rng rng(31);
    auto straight = z_axis_line();
    auto circular = NullWorldline::circular(1.0, -50, 50);
    int accepted = 0;
    while (accepted < 1000) {
        const NullWorldline& w = (accepted % 2 == 0) ? straight : circular;
        FourVector x(rng.uniform(-5, 20), rng.vec3(-8, 8));
        RetardedFrame fr;
        try {
            fr = retarded_frame(w, x);
        } catch (const Error&) {
            continue;
        }
        ++accepted;
        CHECK(fr.R.t > 0.0);
        CHECK(std::abs(mdot(fr.R, fr.R)) <= 1e-10 * fr.R.norm_inf() * fr.R.norm_inf());
        CHECK(fr.r > 0.0);
        CHECK(std::abs(mdot(fr.k, fr.k)) <= 1e-10);
        CHECK(std::abs(mdot(fr.k, fr.u) + 1.0) <= 1e-10);
        CHECK(fr.a.t == 0.0);
        CHECK(std::abs(fr.a_k - mdot(fr.a, fr.k)) == 0.0);
    }
}

TEST_CASE("lw_potential reference and linearity") {
    auto w = z_axis_line();
    RetardedFrame fr = retarded_frame(w, {2, 1, 0, 0});
    FourVector A = lw_potential(1.0, fr);
    CHECK(A.t == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(A.x == doctest::Approx(0.0));
    CHECK(A.z == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(lw_potential(0.0, fr).norm_inf() == 0.0);
    FourVector A2 = lw_potential(2.0, fr);
    CHECK(A2.t == doctest::Approx(2.0 * A.t));
    CHECK(A2.z == doctest::Approx(2.0 * A.z));
}

TEST_CASE("field_tensor: zero for unaccelerated charge, antisymmetric always") {
    auto w = z_axis_line();
    RetardedFrame fr = retarded_frame(w, {2, 1, 0, 0});
    CHECK(field_tensor(1.0, fr).max_abs() == 0.0);

    auto circ = NullWorldline::circular(1.0, -50, 50);
    RetardedFrame fc = retarded_frame(circ, {2, 2, 0, 0});
    EmTensor F = field_tensor(1.3, fc);
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu) CHECK(F.cov(mu, nu) == -F.cov(nu, mu));
}

TEST_CASE("field_tensor matches the finite-difference exterior derivative of lw_potential") {
    auto w = NullWorldline::circular(1.0, -50, 50);
    double q = 1.0;
    FourVector x(2, 2, 0, 0);
    double h = 1e-5;

    // F_{mu nu} = d_mu A_nu - d_nu A_mu with A_nu the covariant potential
    auto A_cov = [&](const FourVector& p) { return lower(lw_potential(q, retarded_frame(w, p))); };
    EmTensor F = field_tensor(q, retarded_frame(w, x));
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu) {
            FourVector xpm = x, xmm = x, xpn = x, xmn = x;
            xpm[mu] += h;
            xmm[mu] -= h;
            xpn[nu] += h;
            xmn[nu] -= h;
            double dmu_Anu = (A_cov(xpm)[nu] - A_cov(xmm)[nu]) / (2 * h);
            double dnu_Amu = (A_cov(xpn)[mu] - A_cov(xmn)[mu]) / (2 * h);
            CHECK(F.cov(mu, nu) == doctest::Approx(dmu_Anu - dnu_Amu).epsilon(1e-6).scale(1.0));
        }
}

TEST_CASE("differentiation rules match finite differences with order-2 convergence") {
    auto w = NullWorldline::circular(1.0, -50, 50);
    FourVector x(2, 2, 0.3, -0.4);
    RetardedFrame fr = retarded_frame(w, x);

    auto frame_at = [&](const FourVector& p) { return retarded_frame(w, p); };
    auto max_err = [&](double h) {
        double worst_s = 0, worst_r = 0, worst_k = 0;
        for (int al = 0; al < 4; ++al) {
            FourVector xp = x, xm = x;
            xp[al] += h;
            xm[al] -= h;
            RetardedFrame fp = frame_at(xp), fm = frame_at(xm);
            // ds/dx^al = -k_al
            double ds = (fp.s - fm.s) / (2 * h);
            worst_s = std::max(worst_s, std::abs(ds + lower(fr.k)[al]));
            // dr/dx^al = -u_al + r a_k k_al
            double dr = (fp.r - fm.r) / (2 * h);
            worst_r = std::max(worst_r,
                               std::abs(dr - (-lower(fr.u)[al] + fr.r * fr.a_k * lower(fr.k)[al])));
            // dk_al/dx^be = (u_al k_be + u_be k_al + eta_al_be)/r - a_k k_al k_be
            for (int be = 0; be < 4; ++be) {
                FourVector yp = x, ym = x;
                yp[be] += h;
                ym[be] -= h;
                double dk = (lower(frame_at(yp).k)[al] - lower(frame_at(ym).k)[al]) / (2 * h);
                double eta = (al == be) ? (al == 0 ? -1.0 : 1.0) : 0.0;
                double expect = (lower(fr.u)[al] * lower(fr.k)[be] +
                                 lower(fr.u)[be] * lower(fr.k)[al] + eta) / fr.r -
                                fr.a_k * lower(fr.k)[al] * lower(fr.k)[be];
                worst_k = std::max(worst_k, std::abs(dk - expect));
            }
        }
        return std::array<double, 3>{worst_s, worst_r, worst_k};
    };

    auto e1 = max_err(1e-3);
    auto e2 = max_err(5e-4);
    for (int i = 0; i < 3; ++i) {
        CHECK(e1[i] <= 1e-4);
        double order = std::log2(e1[i] / e2[i]);
        CHECK(order == doctest::Approx(2.0).epsilon(0.2));
    }
}

TEST_CASE("wave operator residual vanishes as O(h^2)") {
    double q = 1.2;
    auto w = NullWorldline::circular(1.0, -60, 60);
    FourVector x(2, 2, 0.5, 0.3);

    auto resid_norm = [&](double h) {
        auto r = wave_operator_residual(q, w, x, h);
        double m = 0;
        for (double v : r) m = std::max(m, std::abs(v));
        return m;
    };
    double r1 = resid_norm(1e-3), r2 = resid_norm(5e-4);
    CHECK(r1 <= 1.0);  // O(h^2) with a moderate constant
    CHECK(r1 / r2 == doctest::Approx(4.0).epsilon(0.2));

    auto zero = wave_operator_residual(0.0, w, x, 1e-3);
    for (double v : zero) CHECK(v == 0.0);
}

TEST_CASE("singular_ray_distance") {
    auto w = z_axis_line();
    CHECK(singular_ray_distance(w, {2, 1, 0, 0}) == doctest::Approx(2.0).epsilon(1e-12));
    // approaching the ray from behind by delta
    for (double delta : {1e-2, 1e-4, 1e-6}) {
        double d = singular_ray_distance(w, {2, 0, 0, 2 - delta});
        CHECK(d <= 2 * delta);
        CHECK(d >= 0.0);
    }
    // directly behind the charge: r = 2 (t - s)
    FourVector behind(2, 0, 0, -1);
    double s = retarded_time(w, behind);
    CHECK(singular_ray_distance(w, behind) == doctest::Approx(2 * (2 - s)).epsilon(1e-12));
}

TEST_CASE("curvilinear points reproduce r = (t-s)(1-cos theta)") {
    auto w = NullWorldline::circular(1.0, -50, 50);
    testutil::Rng rng(33);
    for (int i = 0; i < 50; ++i) {
        double s = rng.uniform(-2, 2), t = s + rng.uniform(0.5, 4);
        double th = rng.uniform(0.3, M_PI - 0.01), ph = rng.uniform(0, 2 * M_PI);
        auto [x, sg] = curvilinear_to_cartesian(w, t, s, th, ph);
        (void)sg;
        RetardedFrame fr = retarded_frame(w, x);
        CHECK(fr.r == doctest::Approx((t - s) * (1 - std::cos(th))).epsilon(1e-10));
    }
}
