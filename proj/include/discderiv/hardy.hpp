#pragma once

#include <cstdint>

#include "discderiv/poly.hpp"

namespace discderiv {

/// A truncated element of H¹₀: an analytic polynomial with ĥ(0) = 0.
class SymbolH1 {
  public:
    SymbolH1() = default;
    explicit SymbolH1(AnalyticPoly p);
    /// Build from coefficients ĥ(1)..ĥ(N).
    static SymbolH1 from_tail_coeffs(const std::vector<cxd>& c);
    static SymbolH1 monomial(int n, cxd c = cxd(1.0));

    const AnalyticPoly& poly() const { return h_; }
    int degree() const { return h_.degree(); }
    cxd coeff(int n) const { return h_.coeff(n); }
    bool is_zero() const { return h_.is_zero(); }

    SymbolH1 operator+(const SymbolH1& rhs) const { return SymbolH1(h_ + rhs.h_); }
    SymbolH1 operator*(cxd s) const { return SymbolH1(h_ * s); }

  private:
    AnalyticPoly h_;  // defaults to the zero polynomial
};

struct AnalyticLogResult {
    AnalyticPoly value;
    /// max_j |exp(value)(z_j) - p(z_j)| over the boundary grid used.
    double boundary_residual = 0.0;
};

/// Principal-branch Taylor series of log p / sqrt p for p nonvanishing on
/// the closed disc (checked: grid minimum, winding number, |p(0)|).
/// Computed from boundary samples via phase unwrapping and the DFT.
AnalyticLogResult analytic_log(const AnalyticPoly& p, int n_out);
AnalyticLogResult analytic_sqrt(const AnalyticPoly& p, int n_out);

/// h = αz + z²F = αz + k₁² + k₂², with k_i = z sqrt((F ± c)/2) in H²₀.
/// The identity holds for any splitting constant c; c is chosen so both
/// factors stay away from zero on the closed disc.
struct SquareDecomposition {
    cxd alpha{0.0};
    AnalyticPoly F;
    double c = 0.0;
    AnalyticPoly k1, k2;
    /// ‖αz + k1² + k2² − h‖₂ after truncation.
    double tail_error = 0.0;
};

/// n_out < 0 selects the default truncation 4*deg(h) + 64.
SquareDecomposition decompose_squares(const SymbolH1& h, int n_out = -1);

/// Cesàro-weighted cutoff: coefficient n becomes (1 - n/(N+1))·ĥ(n) for
/// n <= N, zero beyond.
SymbolH1 fejer_truncate(const SymbolH1& h, int n);

/// Coefficients ĥ(1)..ĥ(degree) i.i.d. complex Gaussian.
SymbolH1 random_symbol(int degree, std::uint64_t seed);

}  // namespace discderiv
