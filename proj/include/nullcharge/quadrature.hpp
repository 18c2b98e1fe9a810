#ifndef NULLCHARGE_QUADRATURE_HPP
#define NULLCHARGE_QUADRATURE_HPP

#include <functional>
#include <utility>
#include <vector>

#include "nullcharge/errors.hpp"

namespace nullcharge {

/// Adaptive Simpson integration of f over [a, b]. Converged when the local
/// Richardson estimate drops below abs_tol + rel_tol * |whole-interval value|.
/// Throws QuadratureFailure when the recursion depth limit is reached.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double abs_tol, double rel_tol, int max_depth = 48);

/// Gauss-Legendre nodes and weights on [a, b].
std::vector<std::pair<double, double>> gauss_legendre(int n, double a, double b);

}  // namespace nullcharge

#endif
