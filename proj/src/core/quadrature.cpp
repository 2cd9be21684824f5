#include "quadrature.hpp"

#include <cmath>

#include "errors.hpp"

namespace fockproj {

QuadratureRule gauss_legendre(int n, double lo, double hi) {
    require(n >= 1, errc::invalid_argument, "quadrature needs at least one node");
    QuadratureRule rule;
    rule.nodes.resize(static_cast<std::size_t>(n));
    rule.weights.resize(static_cast<std::size_t>(n));

    const double mid = 0.5 * (hi + lo);
    const double half = 0.5 * (hi - lo);
    const int pairs = (n + 1) / 2;
    for (int i = 0; i < pairs; ++i) {
        // Chebyshev-like initial guess for the i-th root of P_n
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
            }
            dp = n * (x * p0 - p1) / (x * x - 1.0);
            double dx = p0 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[static_cast<std::size_t>(i)] = mid - half * x;
        rule.nodes[static_cast<std::size_t>(n - 1 - i)] = mid + half * x;
        rule.weights[static_cast<std::size_t>(i)] = half * w;
        rule.weights[static_cast<std::size_t>(n - 1 - i)] = half * w;
    }
    return rule;
}

QuadratureRule trapezoid(int points, double lo, double hi) {
    require(points >= 2, errc::invalid_argument, "trapezoid needs at least two points");
    QuadratureRule rule;
    rule.nodes.resize(static_cast<std::size_t>(points));
    rule.weights.resize(static_cast<std::size_t>(points));
    const double h = (hi - lo) / (points - 1);
    for (int i = 0; i < points; ++i) {
        rule.nodes[static_cast<std::size_t>(i)] = lo + h * i;
        rule.weights[static_cast<std::size_t>(i)] = (i == 0 || i == points - 1) ? 0.5 * h : h;
    }
    return rule;
}

}  // namespace fockproj
