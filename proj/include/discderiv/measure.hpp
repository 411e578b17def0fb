#pragma once

#include <utility>
#include <vector>

#include "discderiv/poly.hpp"

namespace discderiv {

/// Finite positive Borel measures on the closed disc assembled from three
/// density families, all carried symbolically by a polynomial k:
///   ArcLength  — arc length λ on T (mass 2π),
///   Boundary   — |k(z)|² against arc length on T,
///   Interior   — |k'(z)|² against dΛ(z) = 4 log(1/|z|) dA(z) on D.
enum class DensityKind { ArcLength, Boundary, Interior };

struct MeasureComponent {
    DensityKind kind = DensityKind::ArcLength;
    double weight = 1.0;
    AnalyticPoly k;  // unused for ArcLength
    double mass() const;
};

class DiscMeasure {
  public:
    DiscMeasure() = default;
    static DiscMeasure arc_length(double weight = 1.0);
    static DiscMeasure boundary_density(AnalyticPoly k, double weight = 1.0);
    static DiscMeasure interior_log_density(AnalyticPoly k, double weight = 1.0);

    const std::vector<MeasureComponent>& components() const { return components_; }
    bool empty() const { return components_.empty(); }
    void append(MeasureComponent c);

    double mass() const;
    double mass_quadrature(int nr = 0, int ntheta = 0) const;

  private:
    std::vector<MeasureComponent> components_;
};

/// ∫_D |z|^{2n} dΛ(z) = 2π/(n+1)².
double lambda_moment(int n);
/// The same moment by the radial quadrature rule (cross-check path).
double lambda_moment_quadrature(int n);

/// ⟨p,q⟩_Λ = Σ_n p_n conj(q_n) · 2π/(n+1)², the Λ area inner product.
cxd lambda_inner(const AnalyticPoly& p, const AnalyticPoly& q);
double lambda_norm(const AnalyticPoly& p);

/// ⟨u',v'⟩_Λ in closed form: 2π Σ_{n≥1} û(n) conj(v̂(n)), which equals the
/// boundary pairing of the centered functions (Parseval both ways).
cxd lambda_inner_closed(const AnalyticPoly& u, const AnalyticPoly& v);

/// ⟨u',v'⟩_Λ by tensor quadrature: uniform angular grid, radial rule with
/// the 4 r log(1/r) weight. Requires nr, ntheta >= 4*(deg u + deg v + 1).
cxd lambda_inner_quad(const AnalyticPoly& u, const AnalyticPoly& v, int nr, int ntheta);

/// ‖f‖_{L²(μ)} via component-wise closed forms (Parseval / Λ moments).
double l2_norm_measure(const AnalyticPoly& f, const DiscMeasure& mu);
/// Quadrature cross-check of the same norm.
double l2_norm_measure_quadrature(const AnalyticPoly& f, const DiscMeasure& mu,
                                  int nr = 0, int ntheta = 0);

/// Weighted sum, flattened; weights must be >= 0.
DiscMeasure measure_scale_sum(const std::vector<std::pair<double, DiscMeasure>>& parts);

}  // namespace discderiv
