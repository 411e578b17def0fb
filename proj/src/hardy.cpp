#include "discderiv/hardy.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "discderiv/sampling.hpp"

namespace discderiv {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

SymbolH1::SymbolH1(AnalyticPoly p) : h_(std::move(p)) {
    if (h_.coeff(0) != cxd(0.0))
        throw std::invalid_argument("SymbolH1: constant coefficient must be zero");
}

SymbolH1 SymbolH1::from_tail_coeffs(const std::vector<cxd>& c) {
    std::vector<cxd> v(c.size() + 1, cxd(0.0));
    std::copy(c.begin(), c.end(), v.begin() + 1);
    return SymbolH1(AnalyticPoly(std::move(v)));
}

SymbolH1 SymbolH1::monomial(int n, cxd c) {
    if (n < 1) throw std::invalid_argument("SymbolH1::monomial: need n >= 1");
    return SymbolH1(AnalyticPoly::monomial(n, c));
}

namespace {

struct LogSamples {
    int grid = 0;
    std::vector<cxd> p_vals;
    std::vector<cxd> log_vals;
};

// Boundary log with phase unwrapping; throws if p (nearly) vanishes on the
// grid or winds around the origin.
LogSamples boundary_log(const AnalyticPoly& p, int m) {
    LogSamples out;
    out.grid = m;
    out.p_vals = BoundaryGrid::sample(p, m).samples;

    double vmax = 0.0, vmin = 0.0;
    int argmin = 0;
    for (int j = 0; j < m; ++j) {
        const double a = std::abs(out.p_vals[j]);
        vmax = std::max(vmax, a);
        if (j == 0 || a < vmin) {
            vmin = a;
            argmin = j;
        }
    }
    const double floor = 1e-10 * std::max(vmax, 1e-300);
    if (vmin <= floor) {
        std::ostringstream msg;
        msg << "analytic_log: |p| ~ " << vmin << " near theta = "
            << kTwoPi * double(argmin) / double(m) << ", function vanishes on the disc";
        throw std::domain_error(msg.str());
    }
    if (std::abs(p.coeff(0)) <= floor)
        throw std::domain_error("analytic_log: p(0) is (numerically) zero");

    out.log_vals.resize(m);
    double phase = std::arg(out.p_vals[0]);
    double total = 0.0;
    for (int j = 0; j < m; ++j) {
        if (j > 0) {
            const double d = std::arg(out.p_vals[j] / out.p_vals[j - 1]);
            phase += d;
            total += d;
        }
        out.log_vals[j] = cxd(std::log(std::abs(out.p_vals[j])), phase);
    }
    total += std::arg(out.p_vals[0] / out.p_vals[m - 1]);
    const long wind = std::lround(total / kTwoPi);
    if (wind != 0) {
        std::ostringstream msg;
        msg << "analytic_log: winding number " << wind << ", zeros inside the disc";
        throw std::domain_error(msg.str());
    }
    return out;
}

// Project grid samples of an analytic function to its Taylor coefficients.
// *alias_out reports the largest negative-frequency coefficient, which is
// zero (up to grid resolution) for samples of an analytic function.
AnalyticPoly project_to_poly(const std::vector<cxd>& samples, int n_out,
                             double* alias_out = nullptr) {
    std::vector<cxd> data = samples;
    fft(data, false);
    const double scale = 1.0 / double(data.size());
    if (alias_out) {
        double alias = 0.0;
        for (std::size_t k = data.size() / 2; k < data.size(); ++k)
            alias = std::max(alias, std::abs(data[k]) * scale);
        *alias_out = alias;
    }
    std::vector<cxd> c(n_out + 1);
    for (int n = 0; n <= n_out; ++n) c[n] = data[n] * scale;
    return AnalyticPoly(std::move(c));
}

double exp_residual(const AnalyticPoly& logp, const std::vector<cxd>& p_vals, int m) {
    const auto lv = BoundaryGrid::sample(logp, m).samples;
    double worst = 0.0;
    for (int j = 0; j < m; ++j)
        worst = std::max(worst, std::abs(std::exp(lv[j]) - p_vals[j]));
    return worst;
}

int log_grid_size(const AnalyticPoly& p, int n_out) {
    return next_pow2(std::max({16 * (p.degree() + 1), 4 * (n_out + 1), 2048}));
}

}  // namespace

AnalyticLogResult analytic_log(const AnalyticPoly& p, int n_out) {
    if (n_out < 0) throw std::invalid_argument("analytic_log: n_out must be >= 0");
    int m = log_grid_size(p, n_out);
    for (;;) {
        LogSamples ls = boundary_log(p, m);
        double alias = 0.0;
        AnalyticPoly logp = project_to_poly(ls.log_vals, n_out, &alias);
        const double lscale = std::max(1.0, std::abs(logp.coeff(0)));
        if (alias > 1e-12 * lscale && m < (1 << 20)) {
            m <<= 1;  // log p not resolved by this grid yet
            continue;
        }
        // principal branch at the center: anchor Im log p(0) to the exact
        // constant coefficient, immune to sign noise in the samples
        const double target = std::arg(p.coeff(0));
        const double k = std::round((logp.coeff(0).imag() - target) / kTwoPi);
        if (k != 0.0) logp += AnalyticPoly::constant(cxd(0.0, -kTwoPi * k));
        const double residual = exp_residual(logp, ls.p_vals, m);
        return {std::move(logp), residual};
    }
}

AnalyticLogResult analytic_sqrt(const AnalyticPoly& p, int n_out) {
    if (n_out < 0) throw std::invalid_argument("analytic_sqrt: n_out must be >= 0");
    int m = next_pow2(std::max(4 * (n_out + 1), log_grid_size(p, n_out)));
    for (;;) {
        // exp of half the unwrapped boundary log is the continuous square
        // root; projecting its samples avoids truncating the log first.
        LogSamples ls = boundary_log(p, m);
        std::vector<cxd> root_vals(m);
        double rscale = 1.0;
        for (int j = 0; j < m; ++j) {
            root_vals[j] = std::exp(0.5 * ls.log_vals[j]);
            rscale = std::max(rscale, std::abs(root_vals[j]));
        }
        double alias = 0.0;
        AnalyticPoly root = project_to_poly(root_vals, n_out, &alias);
        if (alias > 1e-12 * rscale && m < (1 << 20)) {
            m <<= 1;
            continue;
        }
        // same branch normalization as analytic_log: Im log p(0) in (-pi, pi]
        cxd mean(0.0);
        for (const cxd& lv : ls.log_vals) mean += lv;
        mean /= double(m);
        const double target = std::arg(p.coeff(0));
        const double k = std::round((mean.imag() - target) / kTwoPi);
        if (k != 0.0) root *= std::exp(cxd(0.0, -std::numbers::pi * k));
        const auto r_vals = BoundaryGrid::sample(root, m).samples;
        double worst = 0.0;
        for (int j = 0; j < m; ++j)
            worst = std::max(worst, std::abs(r_vals[j] * r_vals[j] - ls.p_vals[j]));
        return {std::move(root), worst};
    }
}

SquareDecomposition decompose_squares(const SymbolH1& h, int n_out) {
    SquareDecomposition d;
    d.alpha = h.coeff(1);
    if (n_out < 0) n_out = 4 * h.degree() + 64;

    if (h.degree() >= 2) {
        std::vector<cxd> fc(h.degree() - 1);
        for (int n = 2; n <= h.degree(); ++n) fc[n - 2] = h.coeff(n);
        d.F = AnalyticPoly(std::move(fc));
    }

    if (d.F.is_zero()) {
        // h = αz exactly; no squares needed
        AnalyticPoly recon = AnalyticPoly::monomial(1, d.alpha);
        d.tail_error = (recon - h.poly()).l2_norm();
        return d;
    }

    const int sup_grid = next_pow2(std::max(4096, 32 * (d.F.degree() + 1)));
    const double c_base = std::max(lp_norm(d.F, 1), 1.001 * sup_norm(d.F, sup_grid));

    // The square-root tails decay like ρ^{-n} with ρ the modulus of the
    // nearest zero of F ± c, which sits close to 1 when c barely clears
    // sup|F|. Extend the truncation until the reconstruction residual is
    // negligible; if it stagnates, double c — the identity k₁²+k₂² = z²F
    // holds for any c, and a larger c pushes the zeros outward.
    const double h_norm = h.poly().l2_norm();
    const double tol = 1e-9 * h_norm;
    const int start = std::max(n_out, 8);
    const int cap = std::max(4096, start);
    try {
        for (d.c = c_base;; d.c *= 2.0) {
            const AnalyticPoly half_plus = (d.F + AnalyticPoly::constant(d.c)) * cxd(0.5);
            const AnalyticPoly half_minus = (d.F - AnalyticPoly::constant(d.c)) * cxd(0.5);
            double prev = std::numeric_limits<double>::infinity();
            for (int target = start; target <= cap; target *= 2) {
                AnalyticLogResult s1 = analytic_sqrt(half_plus, target);
                AnalyticLogResult s2 = analytic_sqrt(half_minus, target);
                d.k1 = s1.value.shifted(1);
                d.k2 = s2.value.shifted(1);
                const AnalyticPoly recon =
                    AnalyticPoly::monomial(1, d.alpha) + d.k1 * d.k1 + d.k2 * d.k2;
                d.tail_error = (recon - h.poly()).l2_norm();
                if (d.tail_error <= tol) return d;
                if (d.tail_error > 0.25 * prev) break;  // too slow, inflate c instead
                prev = d.tail_error;
            }
            if (d.c > c_base * 1e9) return d;  // give up; tail_error records the gap
        }
    } catch (const std::domain_error& e) {
        // F ± c is zero-free on the closed disc by construction of c, so a
        // square-root refusal here means the inflation logic is broken
        throw std::logic_error(std::string("decompose_squares: internal error: ") +
                               e.what());
    }
}

SymbolH1 fejer_truncate(const SymbolH1& h, int n) {
    if (n < 0) throw std::invalid_argument("fejer_truncate: need N >= 0");
    std::vector<cxd> c(std::min(h.degree(), n) + 1, cxd(0.0));
    for (int k = 1; k < static_cast<int>(c.size()); ++k)
        c[k] = (1.0 - double(k) / double(n + 1)) * h.coeff(k);
    return SymbolH1(AnalyticPoly(std::move(c)));
}

SymbolH1 random_symbol(int degree, std::uint64_t seed) {
    if (degree < 1) throw std::invalid_argument("random_symbol: need degree >= 1");
    GaussianSampler rng(seed);
    std::vector<cxd> c(degree);
    for (auto& x : c) x = rng.complex_normal();
    return SymbolH1::from_tail_coeffs(c);
}

}  // namespace discderiv
