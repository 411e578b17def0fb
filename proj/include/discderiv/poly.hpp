#pragma once

#include <complex>
#include <vector>

#include "discderiv/fft.hpp"

namespace discderiv {

/// An analytic polynomial sum c_n z^n stored by Taylor coefficients.
/// degree() is the index of the last stored coefficient; trailing zeros
/// are permitted, the zero polynomial is stored as the single coefficient 0.
class AnalyticPoly {
  public:
    AnalyticPoly() : coeffs_(1, cxd(0.0)) {}
    explicit AnalyticPoly(std::vector<cxd> coeffs);
    static AnalyticPoly monomial(int n, cxd c = cxd(1.0));
    static AnalyticPoly constant(cxd c);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    cxd coeff(int n) const {
        return (n >= 0 && n < static_cast<int>(coeffs_.size())) ? coeffs_[n] : cxd(0.0);
    }
    const std::vector<cxd>& coeffs() const { return coeffs_; }
    bool is_zero() const;

    cxd operator()(cxd z) const;  // Horner

    AnalyticPoly derivative() const;
    AnalyticPoly truncated(int max_degree) const;
    AnalyticPoly shifted(int k) const;  // multiply by z^k, k >= 0

    /// (2π Σ|c_n|²)^{1/2}, the L²(T) norm in the arc-length normalization.
    double l2_norm() const;
    double l2_norm_sq() const;
    double coeff_abs_sum() const;

    AnalyticPoly& operator+=(const AnalyticPoly& rhs);
    AnalyticPoly& operator-=(const AnalyticPoly& rhs);
    AnalyticPoly& operator*=(cxd s);
    friend AnalyticPoly operator+(AnalyticPoly a, const AnalyticPoly& b) { return a += b; }
    friend AnalyticPoly operator-(AnalyticPoly a, const AnalyticPoly& b) { return a -= b; }
    friend AnalyticPoly operator*(AnalyticPoly a, cxd s) { return a *= s; }
    friend AnalyticPoly operator*(cxd s, AnalyticPoly a) { return a *= s; }

  private:
    std::vector<cxd> coeffs_;
};

/// Coefficient convolution; degree = deg p + deg q.
AnalyticPoly poly_multiply(const AnalyticPoly& p, const AnalyticPoly& q);
AnalyticPoly operator*(const AnalyticPoly& p, const AnalyticPoly& q);

/// The antiderivative trick: u with u(0)=0 and u' = f'g, exact at
/// coefficient level, û(n) = (f'g)^(n-1)/n.
AnalyticPoly u_of(const AnalyticPoly& f, const AnalyticPoly& g);

/// Uniform samples of a polynomial on the circle, z_j = exp(2πi j/M),
/// M a power of two. Recovering coefficients is exact for deg < M.
struct BoundaryGrid {
    int size = 0;
    std::vector<cxd> samples;

    static BoundaryGrid sample(const AnalyticPoly& p, int m);
    AnalyticPoly to_poly(int max_degree) const;
};

/// Max of |p| over the M-point grid, a lower bound on the sup norm.
/// Requires M >= 4*(deg p + 1).
double sup_norm(const AnalyticPoly& p, int m);

/// Certified upper bound on the sup norm: grid max inflated by the
/// Bernstein factor 1/(1 - π d/M). Requires M > π * deg p.
double sup_norm_upper(const AnalyticPoly& p, int m);

int default_sup_grid(int degree);

/// L^p(T) norm, p in {1,2}, total arc mass 2π. p=2 is exact (Parseval);
/// p=1 uses trapezoid quadrature with grid doubling until two successive
/// grids agree within rel_tol.
double lp_norm(const AnalyticPoly& p, int exponent, double rel_tol = 1e-10);

}  // namespace discderiv
