#pragma once

#include <functional>
#include <vector>

namespace discderiv {

struct QuadRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Gauss–Legendre rule mapped to [0,1], exact for polynomials of degree <= 2n-1.
QuadRule gauss_legendre01(int n);

/// Rule with Gauss–Legendre nodes on (0,1) whose weights absorb the
/// measure 4 r log(1/r) dr: exact for radial polynomials of degree < n.
/// The modified weights come from Legendre-basis moments of the weight
/// function, themselves computed by graded composite quadrature.
const QuadRule& radial_log_rule(int n);

/// Gauss–Legendre nodes on (0,1) with the polynomial weight r(1-r)^2
/// folded in pointwise; exact while total degree stays <= 2n-1.
QuadRule radial_carleson_rule(int n);

/// Adaptive Simpson on [a,b] to absolute tolerance tol.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tol, int max_depth = 40);

}  // namespace discderiv
