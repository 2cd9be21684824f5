#ifndef FOCKPROJ_CORE_QUADRATURE_HPP
#define FOCKPROJ_CORE_QUADRATURE_HPP

#include <vector>

namespace fockproj {

struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

// Gauss–Legendre rule on [lo, hi]; nodes by Newton iteration on P_n.
QuadratureRule gauss_legendre(int n, double lo, double hi);

// Uniform trapezoid rule on [lo, hi] with `points` nodes (endpoints included,
// half weights at the ends).
QuadratureRule trapezoid(int points, double lo, double hi);

}  // namespace fockproj

#endif
