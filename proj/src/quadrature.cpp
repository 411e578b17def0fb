#include "discderiv/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace discderiv {

namespace {

// Legendre P_n(t) and derivative on [-1,1] by the three-term recurrence.
std::pair<double, double> legendre_with_deriv(int n, double t) {
    double p0 = 1.0, p1 = t;
    if (n == 0) return {1.0, 0.0};
    for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * t * p1 - (k - 1.0) * p0) / double(k);
        p0 = p1;
        p1 = p2;
    }
    const double dp = double(n) * (t * p1 - p0) / (t * t - 1.0);
    return {p1, dp};
}

// Fill values P_0..P_{kmax}(t).
void legendre_all(int kmax, double t, std::vector<double>& out) {
    out.resize(kmax + 1);
    out[0] = 1.0;
    if (kmax == 0) return;
    out[1] = t;
    for (int k = 2; k <= kmax; ++k)
        out[k] = ((2.0 * k - 1.0) * t * out[k - 1] - (k - 1.0) * out[k - 2]) / double(k);
}

QuadRule gauss_legendre_symmetric(int n) {
    QuadRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        // Tricomi initial guess, then Newton
        double t = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        for (int it = 0; it < 100; ++it) {
            auto [p, dp] = legendre_with_deriv(n, t);
            const double dt = p / dp;
            t -= dt;
            if (std::abs(dt) < 1e-15) break;
        }
        auto [p, dp] = legendre_with_deriv(n, t);
        (void)p;
        rule.nodes[i] = t;
        rule.weights[i] = 2.0 / ((1.0 - t * t) * dp * dp);
    }
    return rule;
}

}  // namespace

QuadRule gauss_legendre01(int n) {
    if (n < 1) throw std::invalid_argument("gauss_legendre01: need n >= 1");
    QuadRule sym = gauss_legendre_symmetric(n);
    QuadRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        rule.nodes[i] = 0.5 * (sym.nodes[i] + 1.0);
        rule.weights[i] = 0.5 * sym.weights[i];
    }
    return rule;
}

const QuadRule& radial_log_rule(int n) {
    static std::map<int, QuadRule> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    if (n < 1) throw std::invalid_argument("radial_log_rule: need n >= 1");

    // Legendre-basis moments m_k = ∫_0^1 P_k(2x-1) 4x log(1/x) dx by
    // composite Gauss on dyadic panels graded toward the log singularity.
    const QuadRule panel = gauss_legendre01(32);
    std::vector<double> moments(n, 0.0);
    std::vector<double> pk;
    const int kPanels = 48;
    for (int j = 0; j < kPanels; ++j) {
        const double b = std::ldexp(1.0, -j);
        const double a = 0.5 * b;
        const double len = b - a;
        for (std::size_t q = 0; q < panel.nodes.size(); ++q) {
            const double x = a + len * panel.nodes[q];
            const double w = len * panel.weights[q] * 4.0 * x * std::log(1.0 / x);
            legendre_all(n - 1, 2.0 * x - 1.0, pk);
            for (int k = 0; k < n; ++k) moments[k] += w * pk[k];
        }
    }

    QuadRule rule = gauss_legendre01(n);
    for (int i = 0; i < n; ++i) {
        legendre_all(n - 1, 2.0 * rule.nodes[i] - 1.0, pk);
        double s = 0.0;
        for (int k = 0; k < n; ++k) s += (2.0 * k + 1.0) * pk[k] * moments[k];
        rule.weights[i] *= s;
    }
    auto [pos, inserted] = cache.emplace(n, std::move(rule));
    (void)inserted;
    return pos->second;
}

QuadRule radial_carleson_rule(int n) {
    QuadRule rule = gauss_legendre01(n);
    for (int i = 0; i < n; ++i) {
        const double r = rule.nodes[i];
        rule.weights[i] *= r * (1.0 - r) * (1.0 - r);
    }
    return rule;
}

namespace {

double simpson(double fa, double fm, double fb, double h) {
    return h / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive_simpson_rec(const std::function<double(double)>& f, double a, double b,
                            double fa, double fm, double fb, double whole, double tol,
                            int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = simpson(fa, flm, fm, m - a);
    const double right = simpson(fm, frm, fb, b - m);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;
    return adaptive_simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           adaptive_simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tol, int max_depth) {
    const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    const double whole = simpson(fa, fm, fb, b - a);
    return adaptive_simpson_rec(f, a, b, fa, fm, fb, whole, tol, max_depth);
}

}  // namespace discderiv
