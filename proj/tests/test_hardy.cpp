#include <doctest.h>

#include <numbers>

#include "discderiv/hardy.hpp"
#include "discderiv/sampling.hpp"

using namespace discderiv;

namespace {

constexpr double kPi = std::numbers::pi;

double max_coeff_dist(const AnalyticPoly& a, const AnalyticPoly& b, int through = -1) {
    if (through < 0) through = std::max(a.degree(), b.degree());
    double worst = 0.0;
    for (int n = 0; n <= through; ++n)
        worst = std::max(worst, std::abs(a.coeff(n) - b.coeff(n)));
    return worst;
}

// random polynomial 2 + q with small q, nonvanishing on the closed disc
AnalyticPoly nonvanishing_poly(int degree, std::uint64_t seed) {
    AnalyticPoly q = random_poly(degree, seed);
    const double s = q.coeff_abs_sum();
    if (s > 0.0) q *= cxd(0.5 / s);
    return q + AnalyticPoly::constant(2.0);
}

}  // namespace

TEST_CASE("SymbolH1 enforces a zero constant coefficient") {
    CHECK_THROWS_AS(SymbolH1(AnalyticPoly::constant(1.0)), std::invalid_argument);
    const SymbolH1 h = SymbolH1::from_tail_coeffs({cxd(2.0), cxd(0.0, 1.0)});
    CHECK(h.coeff(0) == cxd(0.0));
    CHECK(h.coeff(1) == cxd(2.0));
    CHECK(h.coeff(2) == cxd(0.0, 1.0));
}

TEST_CASE("analytic_log closed forms") {
    const auto zero = analytic_log(AnalyticPoly::constant(1.0), 8);
    CHECK(zero.value.coeff(0) == cxd(0.0));
    for (int n = 0; n <= 8; ++n) CHECK(std::abs(zero.value.coeff(n)) < 1e-14);

    const auto one = analytic_log(AnalyticPoly::constant(std::exp(1.0)), 4);
    CHECK(std::abs(one.value.coeff(0) - cxd(1.0)) < 1e-14);

    // log(1 + z/2): coefficients (-1)^{n+1} (1/2)^n / n
    const AnalyticPoly p(std::vector<cxd>{1.0, 0.5});
    const auto lg = analytic_log(p, 16);
    for (int n = 1; n <= 16; ++n) {
        const double expect = (n % 2 ? 1.0 : -1.0) * std::pow(0.5, n) / double(n);
        CHECK(std::abs(lg.value.coeff(n) - cxd(expect)) < 1e-12);
    }
    CHECK(lg.boundary_residual < 1e-6);
}

TEST_CASE("analytic_log rejects functions with zeros in the disc") {
    // zero on the boundary
    CHECK_THROWS_AS(analytic_log(AnalyticPoly(std::vector<cxd>{1.0, 1.0}), 8),
                    std::domain_error);
    // zero at an interior point: winding number 1
    CHECK_THROWS_AS(analytic_log(AnalyticPoly(std::vector<cxd>{-0.5, 1.0}), 8),
                    std::domain_error);
    // zero at the origin
    CHECK_THROWS_AS(analytic_log(AnalyticPoly::monomial(1), 8), std::domain_error);
}

TEST_CASE("analytic_sqrt closed forms and self-consistency") {
    const auto two = analytic_sqrt(AnalyticPoly::constant(4.0), 4);
    CHECK(std::abs(two.value.coeff(0) - cxd(2.0)) < 1e-13);

    const AnalyticPoly base(std::vector<cxd>{1.0, 0.5});
    const auto back = analytic_sqrt(poly_multiply(base, base), 8);
    CHECK(max_coeff_dist(back.value, base) < 1e-12);

    const auto root = analytic_sqrt(base, 16);
    const AnalyticPoly square = poly_multiply(root.value, root.value);
    CHECK(max_coeff_dist(square, base, 16) < 1e-10);
}

TEST_CASE("exp(log p) and sqrt(p)^2 reproduce p for random nonvanishing polynomials") {
    for (int trial = 0; trial < 50; ++trial) {
        const int deg = 1 + static_cast<int>(derive_seed(91, trial) % 8);
        const AnalyticPoly p = nonvanishing_poly(deg, derive_seed(92, trial));
        const int n_out = 4 * deg + 32;

        const auto lg = analytic_log(p, n_out);
        // exponentiate the series independently of the boundary machinery
        AnalyticPoly expl = AnalyticPoly::constant(std::exp(lg.value.coeff(0)));
        AnalyticPoly reduced = lg.value;
        reduced -= AnalyticPoly::constant(lg.value.coeff(0));
        AnalyticPoly term = AnalyticPoly::constant(1.0);
        for (int k = 1; k <= 40; ++k) {
            term = poly_multiply(term, reduced).truncated(n_out) * cxd(1.0 / double(k));
            expl += term * std::exp(lg.value.coeff(0));
        }
        CHECK(max_coeff_dist(expl.truncated(n_out), p, n_out) < 1e-9);

        const auto rt = analytic_sqrt(p, n_out);
        CHECK(max_coeff_dist(poly_multiply(rt.value, rt.value).truncated(n_out), p, n_out) <
              1e-9);
    }
}

TEST_CASE("decompose_squares closed forms") {
    SUBCASE("h = z has no square part") {
        const auto d = decompose_squares(SymbolH1::monomial(1));
        CHECK(d.alpha == cxd(1.0));
        CHECK(d.F.is_zero());
        CHECK(d.k1.is_zero());
        CHECK(d.k2.is_zero());
        CHECK(d.tail_error < 1e-15);
    }
    SUBCASE("h = z^2: constant F forces c = 2π and constant-rotated branches") {
        const auto d = decompose_squares(SymbolH1::monomial(2));
        CHECK(std::abs(d.alpha) == 0.0);
        CHECK(d.F.degree() == 0);
        CHECK(d.F.coeff(0) == cxd(1.0));
        CHECK(d.c == doctest::Approx(2 * kPi).epsilon(1e-12));
        CHECK(std::abs(d.k1.coeff(1) - cxd(std::sqrt((1 + 2 * kPi) / 2))) < 1e-9);
        CHECK(std::abs(d.k2.coeff(1) - cxd(0.0, std::sqrt((2 * kPi - 1) / 2))) < 1e-9);
        const AnalyticPoly recon = poly_multiply(d.k1, d.k1) + poly_multiply(d.k2, d.k2);
        CHECK(max_coeff_dist(recon, AnalyticPoly::monomial(2)) < 1e-12);
    }
    SUBCASE("h = z + z^3") {
        const SymbolH1 h = SymbolH1::from_tail_coeffs({cxd(1.0), cxd(0.0), cxd(1.0)});
        const auto d = decompose_squares(h, 64);
        CHECK(d.alpha == cxd(1.0));
        CHECK(d.F.degree() == 1);
        CHECK(std::abs(d.F.coeff(1) - cxd(1.0)) == 0.0);
        CHECK(d.c == doctest::Approx(2 * kPi).epsilon(1e-9));
        CHECK(d.tail_error <= 1e-10);
    }
    SUBCASE("h = 0") {
        const auto d = decompose_squares(SymbolH1());
        CHECK(d.alpha == cxd(0.0));
        CHECK(d.k1.is_zero());
        CHECK(d.k2.is_zero());
        CHECK(d.tail_error == 0.0);
    }
}

TEST_CASE("decompose_squares reconstructs 50 random symbols") {
    for (int trial = 0; trial < 50; ++trial) {
        const int deg = 2 + static_cast<int>(derive_seed(17, trial) % 11);
        const SymbolH1 h = random_symbol(deg, derive_seed(18, trial));
        const auto d = decompose_squares(h, 64);
        const double rel = d.tail_error / h.poly().l2_norm();
        CHECK(rel <= 1e-8);
        // membership in H²₀
        CHECK(d.k1.coeff(0) == cxd(0.0));
        CHECK(d.k2.coeff(0) == cxd(0.0));
    }
}

TEST_CASE("decompose_squares survives sharply peaked symbols") {
    // ((1+z)/2)^40 has L1 norm below its sup, so the splitting constant
    // starts barely above sup|F| and the square-root tails stall until the
    // constant is inflated
    AnalyticPoly peak = AnalyticPoly::constant(1.0);
    const AnalyticPoly half(std::vector<cxd>{0.5, 0.5});
    for (int i = 0; i < 40; ++i) peak = poly_multiply(peak, half);
    const SymbolH1 h{peak.shifted(2)};
    const SquareDecomposition d = decompose_squares(h);
    CHECK(d.tail_error <= 1e-9 * h.poly().l2_norm());
    CHECK(d.c >= 1.001);
    const AnalyticPoly recon =
        AnalyticPoly::monomial(1, d.alpha) + poly_multiply(d.k1, d.k1) +
        poly_multiply(d.k2, d.k2);
    CHECK((recon - h.poly()).l2_norm() <= 1e-8 * h.poly().l2_norm());
}

TEST_CASE("fejer_truncate weights and L1 contraction") {
    const SymbolH1 z = SymbolH1::monomial(1);
    CHECK(std::abs(fejer_truncate(z, 1).coeff(1) - cxd(0.5)) == 0.0);
    CHECK(std::abs(fejer_truncate(z, 999).coeff(1) - cxd(1.0 - 1.0 / 1000.0)) < 1e-15);

    const SymbolH1 h = SymbolH1::from_tail_coeffs({cxd(1.0), cxd(1.0)});
    const SymbolH1 t = fejer_truncate(h, 2);
    CHECK(std::abs(t.coeff(1) - cxd(2.0 / 3.0)) < 1e-15);
    CHECK(std::abs(t.coeff(2) - cxd(1.0 / 3.0)) < 1e-15);

    for (int trial = 0; trial < 8; ++trial) {
        const SymbolH1 r = random_symbol(8, derive_seed(44, trial));
        const double base = lp_norm(r.poly(), 1);
        for (int n : {0, 1, 2, 3, 5, 8, 16, 32}) {
            CHECK(lp_norm(fejer_truncate(r, n).poly(), 1) <= base * (1.0 + 1e-9));
        }
    }
}
