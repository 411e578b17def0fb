#include "discderiv/bmoa.hpp"

#include <cmath>
#include <iostream>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "discderiv/quadrature.hpp"
#include "discderiv/sampling.hpp"

namespace discderiv {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// ∫_{t0}^{t1} f(e^{iθ}) dθ in closed form.
cxd arc_integral(const AnalyticPoly& f, double t0, double t1) {
    cxd s = f.coeff(0) * (t1 - t0);
    for (int n = 1; n <= f.degree(); ++n) {
        const cxd e1 = std::exp(cxd(0.0, n * t1));
        const cxd e0 = std::exp(cxd(0.0, n * t0));
        s += f.coeff(n) * (e1 - e0) / cxd(0.0, double(n));
    }
    return s;
}

double mean_oscillation(const AnalyticPoly& f, double t0, double t1, double tol) {
    const double len = t1 - t0;
    const cxd avg = arc_integral(f, t0, t1) / len;
    const double integral = adaptive_simpson(
        [&](double t) { return std::abs(f(std::exp(cxd(0.0, t))) - avg); }, t0, t1, tol);
    return integral / len;
}

}  // namespace

SeminormEstimate osc_seminorm(const AnalyticPoly& f, int depth) {
    if (depth < 1) throw std::invalid_argument("osc_seminorm: need depth >= 1");
    SeminormEstimate est;
    est.kind = SeminormEstimate::Kind::Osc;
    const double tol = 1e-11 * (1.0 + f.coeff_abs_sum());
    int arcs = 0;
    for (int gen = 0; gen <= depth; ++gen) {
        const int count = 1 << gen;
        const double len = kTwoPi / double(count);
        const int offsets = gen == 0 ? 1 : 2;
        for (int half = 0; half < offsets; ++half) {
            const double shift = half * 0.5 * len;
            for (int i = 0; i < count; ++i) {
                const double t0 = len * i + shift;
                const double osc = mean_oscillation(f, t0, t0 + len, tol);
                ++arcs;
                if (osc > est.value) {
                    est.value = osc;
                    std::ostringstream w;
                    w << "arc gen=" << gen << " index=" << i
                      << (half ? " offset=half" : "");
                    est.witness = w.str();
                }
            }
        }
    }
    est.test_family_size = arcs;
    return est;
}

SeminormEstimate dual_seminorm(const AnalyticPoly& f, const std::vector<SymbolH1>& test_h) {
    if (test_h.empty()) throw std::invalid_argument("dual_seminorm: empty test family");
    SeminormEstimate est;
    est.kind = SeminormEstimate::Kind::Dual;
    est.test_family_size = static_cast<int>(test_h.size());
    for (std::size_t i = 0; i < test_h.size(); ++i) {
        const SymbolH1& h = test_h[i];
        if (h.is_zero()) {
            std::cerr << "dual_seminorm: skipping zero test symbol #" << i << "\n";
            continue;
        }
        cxd pairing(0.0);
        for (int n = 1; n <= std::min(f.degree(), h.degree()); ++n)
            pairing += f.coeff(n) * std::conj(h.coeff(n));
        const double value = kTwoPi * std::abs(pairing) / lp_norm(h.poly(), 1);
        if (value > est.value) {
            est.value = value;
            est.witness = "test_h[" + std::to_string(i) + "]";
        }
    }
    return est;
}

double carleson_ratio(const AnalyticPoly& w, const AnalyticPoly& k, int nr, int ntheta) {
    const AnalyticPoly q = poly_multiply(w.derivative(), k);
    const int trig_deg = q.degree();
    if (ntheta <= 0) ntheta = next_pow2(std::max(64, 2 * trig_deg + 2));
    if (nr <= 0) nr = trig_deg + 4;
    if (ntheta < 2 * trig_deg + 1 || 2 * nr - 1 < 2 * trig_deg + 3)
        throw std::invalid_argument("carleson_ratio: quadrature sizes too small");
    const double k_mass = k.l2_norm_sq();
    if (k_mass == 0.0) throw std::invalid_argument("carleson_ratio: zero test function");

    const QuadRule rule = radial_carleson_rule(nr);
    double total = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const double r = rule.nodes[i];
        double ring = 0.0;
        for (int j = 0; j < ntheta; ++j) {
            const double th = kTwoPi * double(j) / double(ntheta);
            ring += std::norm(q(r * cxd(std::cos(th), std::sin(th))));
        }
        total += rule.weights[i] * ring * (kTwoPi / double(ntheta));
    }
    return total / k_mass;
}

SeminormEstimate carleson_seminorm(const AnalyticPoly& f,
                                   const std::vector<AnalyticPoly>& test_k, int nr,
                                   int ntheta) {
    if (test_k.empty()) throw std::invalid_argument("carleson_seminorm: empty test family");
    SeminormEstimate est;
    est.kind = SeminormEstimate::Kind::Carleson;
    est.test_family_size = static_cast<int>(test_k.size());
    for (std::size_t i = 0; i < test_k.size(); ++i) {
        const double value = std::sqrt(carleson_ratio(f, test_k[i], nr, ntheta));
        if (value > est.value) {
            est.value = value;
            est.witness = "test_k[" + std::to_string(i) + "]";
        }
    }
    return est;
}

bool carleson_multiplicativity_check(const AnalyticPoly& f, const AnalyticPoly& g,
                                     const std::vector<AnalyticPoly>& test_k) {
    const AnalyticPoly u = u_of(f, g);
    const double bound = sup_norm_upper(g, default_sup_grid(g.degree()));
    const double b2 = bound * bound;
    // shared quadrature sizes so both ratios see the same rule
    int max_deg = 0;
    for (const auto& k : test_k)
        max_deg = std::max(max_deg,
                           std::max(u.degree() - 1 + k.degree(), f.degree() - 1 + k.degree()));
    const int ntheta = next_pow2(std::max(64, 2 * max_deg + 2));
    const int nr = max_deg + 4;
    for (const auto& k : test_k) {
        const double lhs = carleson_ratio(u, k, nr, ntheta);
        const double rhs = b2 * carleson_ratio(f, k, nr, ntheta);
        if (lhs > rhs * (1.0 + 1e-9) + 1e-300) return false;
    }
    return true;
}

std::vector<SymbolH1> default_dual_family(std::uint64_t seed) {
    std::vector<SymbolH1> family;
    family.reserve(32);
    for (int i = 0; i < 32; ++i) {
        const SymbolH1 h = random_symbol(16, derive_seed(seed, i));
        family.push_back(fejer_truncate(h, 16));
    }
    return family;
}

std::vector<AnalyticPoly> default_carleson_family(std::uint64_t seed) {
    std::vector<AnalyticPoly> family;
    for (int n = 0; n <= 8; ++n) family.push_back(AnalyticPoly::monomial(n));
    for (int i = 0; i < 16; ++i) family.push_back(random_poly(8, derive_seed(seed, 100 + i)));
    return family;
}

}  // namespace discderiv
