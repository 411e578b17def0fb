#include <doctest.h>

#include <numbers>

#include "discderiv/poly.hpp"
#include "discderiv/quadrature.hpp"
#include "discderiv/sampling.hpp"

using namespace discderiv;

namespace {

constexpr double kPi = std::numbers::pi;

// brute-force double-sum convolution, kept free of the library path
AnalyticPoly convolve_oracle(const AnalyticPoly& p, const AnalyticPoly& q) {
    std::vector<cxd> out(p.degree() + q.degree() + 1, cxd(0.0));
    for (int n = 0; n < static_cast<int>(out.size()); ++n)
        for (int i = 0; i <= n; ++i) out[n] += p.coeff(i) * q.coeff(n - i);
    return AnalyticPoly(out);
}

double max_coeff_dist(const AnalyticPoly& a, const AnalyticPoly& b) {
    double worst = 0.0;
    for (int n = 0; n <= std::max(a.degree(), b.degree()); ++n)
        worst = std::max(worst, std::abs(a.coeff(n) - b.coeff(n)));
    return worst;
}

}  // namespace

TEST_CASE("poly_multiply matches closed forms and the convolution oracle") {
    const AnalyticPoly one_plus(std::vector<cxd>{1.0, 1.0});
    const AnalyticPoly one_minus(std::vector<cxd>{1.0, -1.0});
    const AnalyticPoly prod = poly_multiply(one_plus, one_minus);
    CHECK(prod.degree() == 2);
    CHECK(std::abs(prod.coeff(0) - cxd(1.0)) == 0.0);
    CHECK(std::abs(prod.coeff(1)) == 0.0);
    CHECK(std::abs(prod.coeff(2) - cxd(-1.0)) == 0.0);

    const AnalyticPoly z = AnalyticPoly::monomial(1);
    const AnalyticPoly z2 = poly_multiply(z, z);
    CHECK(z2.degree() == 2);
    CHECK(std::abs(z2.coeff(2) - cxd(1.0)) == 0.0);

    const AnalyticPoly p = random_poly(3, 7);
    const AnalyticPoly q = random_poly(4, derive_seed(7, 1));
    CHECK(max_coeff_dist(poly_multiply(p, q), convolve_oracle(p, q)) < 1e-14);
    CHECK(poly_multiply(p, q).degree() == 7);
}

TEST_CASE("u_of produces the zero-constant antiderivative of f'g") {
    const AnalyticPoly z = AnalyticPoly::monomial(1);
    const AnalyticPoly one = AnalyticPoly::constant(1.0);

    CHECK(max_coeff_dist(u_of(z, one), z) == 0.0);

    const AnalyticPoly u1 = u_of(AnalyticPoly::monomial(2), z);
    CHECK(max_coeff_dist(u1, AnalyticPoly::monomial(3, 2.0 / 3.0)) < 1e-16);

    const AnalyticPoly u2 = u_of(z, z);
    CHECK(max_coeff_dist(u2, AnalyticPoly::monomial(2, 0.5)) == 0.0);

    // n*û(n) equals the (n-1)-th coefficient of f'g
    const AnalyticPoly f = random_poly(6, 21);
    const AnalyticPoly g = random_poly(5, 22);
    const AnalyticPoly w = poly_multiply(f.derivative(), g);
    const AnalyticPoly u = u_of(f, g);
    CHECK(u.coeff(0) == cxd(0.0));
    for (int n = 1; n <= w.degree() + 1; ++n)
        CHECK(std::abs(double(n) * u.coeff(n) - w.coeff(n - 1)) < 1e-14);
}

TEST_CASE("sup_norm on the grid") {
    CHECK(sup_norm(AnalyticPoly::constant(1.0), 8) == 1.0);
    CHECK(sup_norm(AnalyticPoly::monomial(5), 64) == doctest::Approx(1.0).epsilon(1e-14));
    const AnalyticPoly p(std::vector<cxd>{1.0, 1.0});
    CHECK(sup_norm(p, 4096) == doctest::Approx(2.0).epsilon(1e-6));
    CHECK_THROWS_AS(sup_norm(random_poly(10, 1), 16), std::invalid_argument);
    // certified upper bound really is above the grid estimate
    CHECK(sup_norm_upper(p, 4096) >= 2.0);
}

TEST_CASE("lp_norm: Parseval exact, L1 by refining quadrature") {
    CHECK(lp_norm(AnalyticPoly::constant(1.0), 1) == doctest::Approx(2 * kPi).epsilon(1e-12));
    CHECK(lp_norm(AnalyticPoly::monomial(9), 2) ==
          doctest::Approx(std::sqrt(2 * kPi)).epsilon(1e-14));

    // oracle: ∫ |1+e^{iθ}| dθ = ∫ 2|cos(θ/2)| dθ = 8 by direct quadrature
    const double oracle =
        adaptive_simpson([](double t) { return 2.0 * std::abs(std::cos(t / 2.0)); }, 0.0,
                         2.0 * kPi, 1e-11);
    CHECK(oracle == doctest::Approx(8.0).epsilon(1e-9));
    const AnalyticPoly p(std::vector<cxd>{1.0, 1.0});
    CHECK(lp_norm(p, 1) == doctest::Approx(8.0).epsilon(1e-8));

    CHECK_THROWS_AS(lp_norm(p, 3), std::invalid_argument);

    for (int trial = 0; trial < 12; ++trial) {
        const AnalyticPoly q = random_poly(64, derive_seed(33, trial));
        double parseval = 0.0;
        for (cxd c : q.coeffs()) parseval += std::norm(c);
        parseval = std::sqrt(2 * kPi * parseval);
        CHECK(lp_norm(q, 2) == doctest::Approx(parseval).epsilon(1e-12));
    }
}

TEST_CASE("BoundaryGrid round-trips coefficients through the DFT") {
    for (int trial = 0; trial < 100; ++trial) {
        const int deg = 1 + static_cast<int>(derive_seed(5, trial) % 60);
        const AnalyticPoly p = random_poly(deg, derive_seed(6, trial));
        const int m = next_pow2(std::max(64, 2 * (deg + 1)));
        const BoundaryGrid grid = BoundaryGrid::sample(p, m);
        const AnalyticPoly back = grid.to_poly(deg);
        double scale = 0.0;
        for (cxd c : p.coeffs()) scale = std::max(scale, std::abs(c));
        CHECK(max_coeff_dist(p, back) <= 1e-12 * std::max(scale, 1.0));
    }
    CHECK_THROWS_AS(BoundaryGrid::sample(random_poly(4, 1), 12), std::invalid_argument);
}
