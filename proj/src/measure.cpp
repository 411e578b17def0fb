#include "discderiv/measure.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "discderiv/quadrature.hpp"

namespace discderiv {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// ∫_T |p|² darc by Parseval.
double boundary_mass(const AnalyticPoly& p) { return p.l2_norm_sq(); }

std::vector<cxd> circle_values(const AnalyticPoly& p, double r, int ntheta) {
    std::vector<cxd> vals(ntheta);
    for (int j = 0; j < ntheta; ++j) {
        const double th = kTwoPi * double(j) / double(ntheta);
        vals[j] = p(r * cxd(std::cos(th), std::sin(th)));
    }
    return vals;
}

}  // namespace

double MeasureComponent::mass() const {
    switch (kind) {
        case DensityKind::ArcLength:
            return weight * kTwoPi;
        case DensityKind::Boundary:
            return weight * boundary_mass(k);
        case DensityKind::Interior: {
            const AnalyticPoly dk = k.derivative();
            return weight * std::abs(lambda_inner(dk, dk));
        }
    }
    return 0.0;
}

DiscMeasure DiscMeasure::arc_length(double weight) {
    DiscMeasure m;
    m.append({DensityKind::ArcLength, weight, AnalyticPoly()});
    return m;
}

DiscMeasure DiscMeasure::boundary_density(AnalyticPoly k, double weight) {
    DiscMeasure m;
    m.append({DensityKind::Boundary, weight, std::move(k)});
    return m;
}

DiscMeasure DiscMeasure::interior_log_density(AnalyticPoly k, double weight) {
    DiscMeasure m;
    m.append({DensityKind::Interior, weight, std::move(k)});
    return m;
}

void DiscMeasure::append(MeasureComponent c) {
    if (c.weight < 0.0) throw std::invalid_argument("DiscMeasure: negative weight");
    components_.push_back(std::move(c));
}

double DiscMeasure::mass() const {
    double s = 0.0;
    for (const auto& c : components_) s += c.mass();
    return s;
}

double DiscMeasure::mass_quadrature(int nr, int ntheta) const {
    const double n = l2_norm_measure_quadrature(AnalyticPoly::constant(1.0), *this, nr, ntheta);
    return n * n;
}

double lambda_moment(int n) {
    if (n < 0) throw std::invalid_argument("lambda_moment: need n >= 0");
    const double d = double(n) + 1.0;
    return kTwoPi / (d * d);
}

double lambda_moment_quadrature(int n) {
    if (n < 0) throw std::invalid_argument("lambda_moment: need n >= 0");
    const QuadRule& rule = radial_log_rule(std::max(80, 2 * n + 8));
    double s = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
        s += rule.weights[i] * std::pow(rule.nodes[i], 2 * n);
    return kTwoPi * s;
}

cxd lambda_inner(const AnalyticPoly& p, const AnalyticPoly& q) {
    cxd s(0.0);
    const int n = std::min(p.degree(), q.degree());
    for (int k = 0; k <= n; ++k) {
        const double d = double(k) + 1.0;
        s += p.coeff(k) * std::conj(q.coeff(k)) / (d * d);
    }
    return kTwoPi * s;
}

double lambda_norm(const AnalyticPoly& p) {
    return std::sqrt(std::abs(lambda_inner(p, p)));
}

cxd lambda_inner_closed(const AnalyticPoly& u, const AnalyticPoly& v) {
    cxd s(0.0);
    const int n = std::min(u.degree(), v.degree());
    for (int k = 1; k <= n; ++k) s += u.coeff(k) * std::conj(v.coeff(k));
    return kTwoPi * s;
}

cxd lambda_inner_quad(const AnalyticPoly& u, const AnalyticPoly& v, int nr, int ntheta) {
    const int need = 4 * (u.degree() + v.degree() + 1);
    if (nr < need || ntheta < need)
        throw std::invalid_argument("lambda_inner_quad: quadrature sizes too small");
    const AnalyticPoly du = u.derivative();
    const AnalyticPoly dv = v.derivative();
    const QuadRule& radial = radial_log_rule(nr);
    cxd total(0.0);
    for (std::size_t i = 0; i < radial.nodes.size(); ++i) {
        const auto us = circle_values(du, radial.nodes[i], ntheta);
        const auto vs = circle_values(dv, radial.nodes[i], ntheta);
        cxd ring(0.0);
        for (int j = 0; j < ntheta; ++j) ring += us[j] * std::conj(vs[j]);
        total += radial.weights[i] * ring * (kTwoPi / double(ntheta));
    }
    return total;
}

double l2_norm_measure(const AnalyticPoly& f, const DiscMeasure& mu) {
    double sq = 0.0;
    for (const auto& c : mu.components()) {
        switch (c.kind) {
            case DensityKind::ArcLength:
                sq += c.weight * f.l2_norm_sq();
                break;
            case DensityKind::Boundary:
                sq += c.weight * poly_multiply(f, c.k).l2_norm_sq();
                break;
            case DensityKind::Interior: {
                const AnalyticPoly q = poly_multiply(f, c.k.derivative());
                sq += c.weight * std::abs(lambda_inner(q, q));
                break;
            }
        }
    }
    return std::sqrt(sq);
}

double l2_norm_measure_quadrature(const AnalyticPoly& f, const DiscMeasure& mu,
                                  int nr, int ntheta) {
    double sq = 0.0;
    for (const auto& c : mu.components()) {
        const int deg = f.degree() + (c.kind == DensityKind::Interior
                                          ? std::max(0, c.k.degree() - 1)
                                          : c.k.degree());
        int m = ntheta > 0 ? ntheta : next_pow2(std::max(256, 4 * (deg + 1)));
        switch (c.kind) {
            case DensityKind::ArcLength:
            case DensityKind::Boundary: {
                // trapezoid on T, exact for trigonometric polynomials
                double ring = 0.0;
                for (const cxd& v : circle_values(
                         c.kind == DensityKind::Boundary ? poly_multiply(f, c.k) : f, 1.0, m))
                    ring += std::norm(v);
                sq += c.weight * ring * kTwoPi / double(m);
                break;
            }
            case DensityKind::Interior: {
                const AnalyticPoly q = poly_multiply(f, c.k.derivative());
                const int n = nr > 0 ? nr : std::max(64, 2 * q.degree() + 8);
                const QuadRule& radial = radial_log_rule(n);
                double total = 0.0;
                for (std::size_t i = 0; i < radial.nodes.size(); ++i) {
                    double ring = 0.0;
                    for (const cxd& v : circle_values(q, radial.nodes[i], m))
                        ring += std::norm(v);
                    total += radial.weights[i] * ring * (kTwoPi / double(m));
                }
                sq += c.weight * total;
                break;
            }
        }
    }
    return std::sqrt(sq);
}

DiscMeasure measure_scale_sum(const std::vector<std::pair<double, DiscMeasure>>& parts) {
    DiscMeasure out;
    for (const auto& [w, mu] : parts) {
        if (w < 0.0) throw std::invalid_argument("measure_scale_sum: negative weight");
        for (const auto& c : mu.components()) {
            MeasureComponent scaled = c;
            scaled.weight *= w;
            out.append(std::move(scaled));
        }
    }
    return out;
}

}  // namespace discderiv
