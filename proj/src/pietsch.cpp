#include "discderiv/pietsch.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "discderiv/sampling.hpp"

namespace discderiv {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kVerifySlack = 1e-6;
}  // namespace

double PietschCertificate::total_mass_closed_form() const {
    const double a2 = std::norm(decomposition.alpha);
    double s = kTwoPi * a2 * kTwoPi;  // weight 2π|α|² times mass(λ) = 2π
    for (const AnalyticPoly* k : {&decomposition.k1, &decomposition.k2}) {
        const double k2 = k->l2_norm_sq();
        s += 16.0 * k2 * (k2 + k2);  // boundary and interior masses are both ‖k‖₂²
    }
    return combine_factor * s;
}

PietschCertificate build_certificate(const SymbolH1& h) {
    PietschCertificate cert;
    cert.symbol = h;
    cert.decomposition = decompose_squares(h);
    cert.combine_factor = 5.0;

    const SquareDecomposition& dec = cert.decomposition;
    cert.components.push_back(
        {"alpha-term", kTwoPi * std::norm(dec.alpha), DiscMeasure::arc_length()});
    cert.components.push_back(
        {"boundary(k1)", 16.0 * dec.k1.l2_norm_sq(), DiscMeasure::boundary_density(dec.k1)});
    cert.components.push_back(
        {"interior(k1)", 16.0 * dec.k1.l2_norm_sq(), DiscMeasure::interior_log_density(dec.k1)});
    cert.components.push_back(
        {"boundary(k2)", 16.0 * dec.k2.l2_norm_sq(), DiscMeasure::boundary_density(dec.k2)});
    cert.components.push_back(
        {"interior(k2)", 16.0 * dec.k2.l2_norm_sq(), DiscMeasure::interior_log_density(dec.k2)});

    std::vector<std::pair<double, DiscMeasure>> parts;
    for (const auto& c : cert.components)
        if (c.weight > 0.0) parts.emplace_back(cert.combine_factor * c.weight, c.measure);
    cert.mu = measure_scale_sum(parts);
    cert.total_mass = cert.mu.mass();
    return cert;
}

VerifyReport verify_certificate(const PietschCertificate& cert, int samples, int deg,
                                std::uint64_t seed) {
    if (samples < 1) throw std::invalid_argument("verify_certificate: need samples >= 1");
    VerifyReport report;
    report.samples = samples;
    report.deg = deg;
    report.seed = seed;

    const DerivationForm d(cert.symbol);
    const int grid = default_sup_grid(deg);

    auto check_pair = [&](const AnalyticPoly& f, const AnalyticPoly& g, int index) {
        const double lhs = std::abs(bilinear_eval(d, f, g));
        const double rhs = l2_norm_measure(f, cert.mu);
        if (rhs == 0.0) {
            if (lhs > 1e-12) ++report.violations;  // measure refuted outright
            return;
        }
        const double ratio = lhs / rhs;
        if (ratio > report.max_ratio) {
            report.max_ratio = ratio;
            report.worst_index = index;
            report.worst_lhs = lhs;
            report.worst_rhs = rhs;
        }
        if (lhs > rhs * (1.0 + kVerifySlack)) ++report.violations;
    };

    // the known extremal pair for pure-α symbols
    check_pair(AnalyticPoly::monomial(1), AnalyticPoly::constant(1.0), -1);

    for (int i = 0; i < samples; ++i) {
        const AnalyticPoly f = random_poly(deg, derive_seed(seed, 2 * i));
        AnalyticPoly g = random_poly(deg, derive_seed(seed, 2 * i + 1));
        const double bound = sup_norm_upper(g, grid);
        if (bound > 0.0) g *= cxd(1.0 / bound);
        check_pair(f, g, i);
    }
    return report;
}

bool combining_inequality_check(const std::vector<double>& values) {
    double sum = 0.0, sum_sq = 0.0;
    for (double v : values) {
        if (v < 0.0) return false;
        sum += v;
        sum_sq += v * v;
    }
    const double m = double(values.size());
    return sum * sum <= m * sum_sq * (1.0 + 1e-12) + 1e-300;
}

}  // namespace discderiv
