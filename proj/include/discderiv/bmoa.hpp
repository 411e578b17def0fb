#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "discderiv/hardy.hpp"
#include "discderiv/poly.hpp"

namespace discderiv {

/// Lower-bound estimate of a BMOA seminorm over a finite test family.
struct SeminormEstimate {
    enum class Kind { Osc, Dual, Carleson };
    double value = 0.0;
    Kind kind = Kind::Osc;
    std::string witness;  // arc or test function attaining the max
    int test_family_size = 0;
};

/// Mean oscillation sup over dyadic arcs of generation <= depth and their
/// half-step rotations.
SeminormEstimate osc_seminorm(const AnalyticPoly& f, int depth);

/// sup |∫_T f conj(h)| / ‖h‖₁ over the test symbols.
SeminormEstimate dual_seminorm(const AnalyticPoly& f, const std::vector<SymbolH1>& test_h);

/// sup over test functions k of the Carleson embedding quotient
/// ( ∫_D |f'k|² (1-|z|)² dA / ‖k‖₂² )^{1/2}. nr/ntheta <= 0 auto-sizes.
SeminormEstimate carleson_seminorm(const AnalyticPoly& f,
                                   const std::vector<AnalyticPoly>& test_k, int nr = 0,
                                   int ntheta = 0);

/// Single-k squared Carleson quotient, shared by the estimator and the
/// multiplicativity check.
double carleson_ratio(const AnalyticPoly& w, const AnalyticPoly& k, int nr = 0,
                      int ntheta = 0);

/// With u = u_of(f,g): checks ratio(u,k) <= U² ratio(f,k) (1+1e-9) per test
/// function, with U a certified upper bound on sup|g|; true pointwise since
/// |u'k|² = |f'g k|² <= sup|g|² |f'k|².
bool carleson_multiplicativity_check(const AnalyticPoly& f, const AnalyticPoly& g,
                                     const std::vector<AnalyticPoly>& test_k);

/// Default test families: 32 Fejér-smoothed random symbols, and monomials
/// 1..z⁸ plus 16 random polynomials.
std::vector<SymbolH1> default_dual_family(std::uint64_t seed = 2024);
std::vector<AnalyticPoly> default_carleson_family(std::uint64_t seed = 2024);

}  // namespace discderiv
