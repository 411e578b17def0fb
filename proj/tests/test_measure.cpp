#include <doctest.h>

#include <numbers>

#include "discderiv/measure.hpp"
#include "discderiv/quadrature.hpp"
#include "discderiv/sampling.hpp"

using namespace discderiv;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("lambda moments: closed form, rule, and an independent oracle") {
    CHECK(lambda_moment(0) == doctest::Approx(2 * kPi).epsilon(1e-15));
    CHECK(lambda_moment(1) == doctest::Approx(kPi / 2).epsilon(1e-15));
    CHECK(lambda_moment(5) == doctest::Approx(2 * kPi / 36).epsilon(1e-15));

    // 8π ∫ r^{2n+1} log(1/r) dr by adaptive quadrature, independent of the rule
    for (int n : {0, 1, 5}) {
        const double oracle =
            8.0 * kPi *
            adaptive_simpson(
                [n](double r) {
                    return r > 0.0 ? std::pow(r, 2 * n + 1) * std::log(1.0 / r) : 0.0;
                },
                0.0, 1.0, 1e-13);
        CHECK(lambda_moment(n) == doctest::Approx(oracle).epsilon(1e-10));
    }

    for (int n = 0; n <= 32; ++n)
        CHECK(std::abs(lambda_moment_quadrature(n) - lambda_moment(n)) < 1e-10);
}

TEST_CASE("lambda inner products in closed form") {
    const AnalyticPoly z = AnalyticPoly::monomial(1);
    const AnalyticPoly z2 = AnalyticPoly::monomial(2);
    CHECK(std::abs(lambda_inner_closed(z, z) - cxd(2 * kPi)) < 1e-14);
    CHECK(std::abs(lambda_inner_closed(z2, z)) == 0.0);
    const AnalyticPoly zz(std::vector<cxd>{0.0, 1.0, 1.0});
    CHECK(std::abs(lambda_inner_closed(zz, zz) - cxd(4 * kPi)) < 1e-14);

    // ⟨u',v'⟩_Λ computed through the raw Λ inner product agrees
    CHECK(std::abs(lambda_inner(zz.derivative(), zz.derivative()) -
                   lambda_inner_closed(zz, zz)) < 1e-13);
}

TEST_CASE("Littlewood-Paley identity: quadrature matches the closed form") {
    const AnalyticPoly z = AnalyticPoly::monomial(1);
    CHECK(std::abs(lambda_inner_quad(z, z, 16, 16) - cxd(2 * kPi)) < 1e-10);
    const AnalyticPoly z3 = AnalyticPoly::monomial(3);
    CHECK(std::abs(lambda_inner_quad(z3, z3, 32, 32) - cxd(2 * kPi)) < 1e-9);
    CHECK(std::abs(lambda_inner_quad(z, AnalyticPoly::monomial(2), 16, 16)) < 1e-10);

    CHECK_THROWS_AS(lambda_inner_quad(z3, z3, 8, 8), std::invalid_argument);

    for (int trial = 0; trial < 25; ++trial) {
        const int deg = 1 + static_cast<int>(derive_seed(71, trial) % 32);
        const AnalyticPoly u = random_poly(deg, derive_seed(72, trial));
        const AnalyticPoly v = random_poly(deg, derive_seed(73, trial));
        const int size = 4 * (u.degree() + v.degree() + 1);
        const cxd closed = lambda_inner_closed(u, v);
        const cxd quad = lambda_inner_quad(u, v, size, size);
        CHECK(std::abs(closed - quad) <= 1e-8 * std::max(1.0, std::abs(closed)));
    }
}

TEST_CASE("Cauchy-Schwarz for the Lambda inner product") {
    for (int trial = 0; trial < 30; ++trial) {
        const AnalyticPoly p = random_poly(10, derive_seed(74, trial));
        const AnalyticPoly q = random_poly(7, derive_seed(75, trial));
        CHECK(std::abs(lambda_inner(p, q)) <=
              lambda_norm(p) * lambda_norm(q) * (1.0 + 1e-12));
    }
}

TEST_CASE("l2_norm_measure closed forms") {
    const AnalyticPoly one = AnalyticPoly::constant(1.0);
    const AnalyticPoly z = AnalyticPoly::monomial(1);

    CHECK(l2_norm_measure(one, DiscMeasure::arc_length()) ==
          doctest::Approx(std::sqrt(2 * kPi)).epsilon(1e-14));

    const AnalyticPoly k = random_poly(5, 99);
    CHECK(l2_norm_measure(one, DiscMeasure::boundary_density(k)) ==
          doctest::Approx(k.l2_norm()).epsilon(1e-13));

    CHECK(l2_norm_measure(z, DiscMeasure::interior_log_density(z)) ==
          doctest::Approx(std::sqrt(kPi / 2)).epsilon(1e-13));
}

TEST_CASE("component masses and additivity") {
    for (int trial = 0; trial < 10; ++trial) {
        AnalyticPoly k = random_poly(6, derive_seed(76, trial));
        CHECK(DiscMeasure::boundary_density(k).mass() ==
              doctest::Approx(k.l2_norm_sq()).epsilon(1e-10));
        // make k(0) = 0, then the interior mass equals ‖k‖₂² as well
        const AnalyticPoly k0 = k.shifted(1).truncated(7);
        CHECK(DiscMeasure::interior_log_density(k0).mass() ==
              doctest::Approx(k0.l2_norm_sq()).epsilon(1e-10));
    }

    CHECK(measure_scale_sum({}).mass() == 0.0);
    CHECK(measure_scale_sum({{2.0, DiscMeasure::arc_length()}}).mass() ==
          doctest::Approx(4 * kPi).epsilon(1e-14));

    const AnalyticPoly z = AnalyticPoly::monomial(1);
    const DiscMeasure both = measure_scale_sum(
        {{1.0, DiscMeasure::boundary_density(z)}, {1.0, DiscMeasure::interior_log_density(z)}});
    CHECK(both.mass() == doctest::Approx(4 * kPi).epsilon(1e-13));
    CHECK(both.components().size() == 2);

    CHECK_THROWS_AS(measure_scale_sum({{-1.0, DiscMeasure::arc_length()}}),
                    std::invalid_argument);
}

TEST_CASE("quadrature cross-check of measure norms and masses") {
    const AnalyticPoly f = random_poly(6, 301);
    const AnalyticPoly k1 = random_poly(4, 302);
    const AnalyticPoly k2 = random_poly(3, 303).shifted(1);
    DiscMeasure mu = measure_scale_sum({{0.7, DiscMeasure::arc_length()},
                                        {1.3, DiscMeasure::boundary_density(k1)},
                                        {2.0, DiscMeasure::interior_log_density(k2)}});
    const double closed = l2_norm_measure(f, mu);
    const double quad = l2_norm_measure_quadrature(f, mu);
    CHECK(quad == doctest::Approx(closed).epsilon(1e-10));
    CHECK(mu.mass_quadrature() == doctest::Approx(mu.mass()).epsilon(1e-10));
}
