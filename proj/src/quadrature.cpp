#include "nullcharge/quadrature.hpp"

#include <cmath>

namespace nullcharge {

namespace {

struct SimpsonCell {
    double a, b, fa, fm, fb, whole;
};

double simpson(double a, double b, double fa, double fm, double fb) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double simpson_rec(const std::function<double(double)>& f, const SimpsonCell& c,
                   double tol, int depth) {
    double m = 0.5 * (c.a + c.b);
    double lm = 0.5 * (c.a + m), rm = 0.5 * (m + c.b);
    double flm = f(lm), frm = f(rm);
    double left = simpson(c.a, m, c.fa, flm, c.fm);
    double right = simpson(m, c.b, c.fm, frm, c.fb);
    double err = left + right - c.whole;
    if (std::abs(err) <= 15.0 * tol)
        return left + right + err / 15.0;
    if (depth <= 0)
        throw QuadratureFailure("adaptive_simpson: depth limit reached");
    return simpson_rec(f, {c.a, m, c.fa, flm, c.fm, left}, 0.5 * tol, depth - 1)
         + simpson_rec(f, {m, c.b, c.fm, frm, c.fb, right}, 0.5 * tol, depth - 1);
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double abs_tol, double rel_tol, int max_depth) {
    if (a == b) return 0.0;
    double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    double whole = simpson(a, b, fa, fm, fb);
    double tol = abs_tol + rel_tol * std::abs(whole);
    if (tol <= 0) tol = 1e-14;
    return simpson_rec(f, {a, b, fa, fm, fb, whole}, tol, max_depth);
}

std::vector<std::pair<double, double>> gauss_legendre(int n, double a, double b) {
    std::vector<std::pair<double, double>> nodes(n);
    double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        // Newton on P_n from the Chebyshev-like initial guess
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            pp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        double w = 2.0 / ((1.0 - x * x) * pp * pp);
        nodes[i] = {mid - half * x, w * half};
        nodes[n - 1 - i] = {mid + half * x, w * half};
    }
    return nodes;
}

}  // namespace nullcharge
