#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>

#include "discderiv/hardy.hpp"
#include "discderiv/poly.hpp"

namespace discderiv {

/// The derivation D_h attached to a symbol h in H¹₀, acting as the bilinear
/// form D_h(f)(g) = ∫_T u conj(h) darc with u(0)=0, u' = f'g. Everything is
/// coefficient arithmetic; the square decomposition is computed once on
/// demand (thread-safe, shared between copies).
class DerivationForm {
  public:
    DerivationForm() : cache_(std::make_shared<Cache>()) {}
    explicit DerivationForm(SymbolH1 h)
        : symbol_(std::move(h)), cache_(std::make_shared<Cache>()) {}

    const SymbolH1& symbol() const { return symbol_; }
    const SquareDecomposition& decomposition() const;

  private:
    struct Cache {
        std::once_flag flag;
        std::optional<SquareDecomposition> value;
    };
    SymbolH1 symbol_;
    std::shared_ptr<Cache> cache_;
};

/// 2π Σ_{n>=1} û(n) conj(ĥ(n)) with u = u_of(f, g).
cxd bilinear_eval(const DerivationForm& d, const AnalyticPoly& f, const AnalyticPoly& g);

/// B(D)(f) = D(f)(1).
cxd b_functional(const DerivationForm& d, const AnalyticPoly& f);

using BilinearEvaluator = std::function<cxd(const AnalyticPoly&, const AnalyticPoly&)>;

/// Recover the symbol from a black-box bilinear form: ĥ(n) = conj(E(zⁿ,1))/2π.
SymbolH1 extract_symbol(const BilinearEvaluator& evaluator, int n);

struct ResidualReport {
    double residual = 0.0;
    double scale = 1.0;
    bool within(double factor) const { return residual <= factor * scale; }
};

/// |D(f)(g) - B(D)(u_of(f,g))|; zero up to rounding by construction.
ResidualReport b_factorization_residual(const DerivationForm& d, const AnalyticPoly& f,
                                        const AnalyticPoly& g);

/// |D(fg)(k) - D(f)(gk) - D(g)(fk)|.
ResidualReport leibniz_residual(const DerivationForm& d, const AnalyticPoly& f,
                                const AnalyticPoly& g, const AnalyticPoly& k);

/// |D(E_N)(g) - D(a)(E_N g)| with E_N the truncated exponential series.
/// Requires sup|a| <= 2 on the grid so the series tail is negligible.
ResidualReport exp_trick_residual(const DerivationForm& d, const AnalyticPoly& a,
                                  const AnalyticPoly& g, int n_exp = 40);

AnalyticPoly truncated_exp(const AnalyticPoly& a, int n_exp);

struct GramMatrix {
    int n = 0;                 // entries are (n+1) x (n+1)
    std::vector<cxd> entries;  // row-major, M_{jk} = D(z^j)(z^k)
    cxd at(int j, int k) const { return entries[std::size_t(j) * (n + 1) + k]; }
};

GramMatrix gram_matrix(const DerivationForm& d, int n);

struct SvdResult {
    int rank = 0;
    std::vector<double> singular_values;  // nonincreasing
};

/// Singular values of the Gram matrix; rank counts values above tol * max.
SvdResult rank_and_singular_values(const GramMatrix& m, double tol);

/// |α| 2π + 8‖k₁‖₂² + 8‖k₂‖₂² from the square decomposition.
double norm_upper_bound(const DerivationForm& d);

/// Max of |D(f)(g)| / (sup f · sup g) over the deterministic pair (z, 1)
/// and `samples` seeded random pairs of degree <= deg.
double norm_lower_bound_mc(const DerivationForm& d, int samples, std::uint64_t seed,
                           int deg);

/// Upper bound on ‖D_h - D_p‖ for the degree-N polynomial part p of h:
/// the triangle-inequality sum Σ_{n>N} norm_upper_bound(D_{ĥ(n) zⁿ}) over
/// the tail monomials. Non-increasing in N and exactly 0 once N >= deg h.
double fejer_tail_bound(const DerivationForm& d, int n);

}  // namespace discderiv
