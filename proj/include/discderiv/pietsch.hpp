#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "discderiv/derivation.hpp"
#include "discderiv/measure.hpp"

namespace discderiv {

/// One of the five building blocks of the control measure, kept with its
/// provenance tag and the scaling applied to it (before the combine factor).
struct CertificateComponent {
    std::string tag;  // alpha-term | boundary(k1) | interior(k1) | boundary(k2) | interior(k2)
    double weight = 0.0;
    DiscMeasure measure;  // unscaled
};

struct VerifyReport {
    int samples = 0;
    int deg = 0;
    std::uint64_t seed = 0;
    double max_ratio = 0.0;
    int violations = 0;
    int worst_index = -1;  // -1 is the deterministic pair (z, 1)
    double worst_lhs = 0.0;
    double worst_rhs = 0.0;
};

/// The explicit control measure μ_D for D_h together with everything needed
/// to audit it: the square decomposition, the five component measures, the
/// combine factor and the sampled verification of ‖D(f)‖ <= ‖f‖_{L²(μ_D)}.
struct PietschCertificate {
    SymbolH1 symbol;
    SquareDecomposition decomposition;
    std::vector<CertificateComponent> components;
    DiscMeasure mu;  // combine_factor * (μ1 + ... + μ5), all weights folded in
    double combine_factor = 5.0;
    double total_mass = 0.0;
    std::optional<VerifyReport> verification;

    double total_mass_closed_form() const;
};

PietschCertificate build_certificate(const SymbolH1& h);

/// Samples pairs (f, g) with ‖g‖∞ <= 1 (certified bound) and checks
/// |D_h(f)(g)| <= ‖f‖_{L²(μ_D)} (1 + 1e-6); the pair (z, 1) is always
/// included. Ratios with a zero right side and zero left side pass.
VerifyReport verify_certificate(const PietschCertificate& cert, int samples, int deg,
                                std::uint64_t seed);

/// (Σ a_j)² <= m Σ a_j² for nonnegative values.
bool combining_inequality_check(const std::vector<double>& values);

}  // namespace discderiv
