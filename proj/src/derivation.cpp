#include "discderiv/derivation.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "discderiv/sampling.hpp"

namespace discderiv {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

const SquareDecomposition& DerivationForm::decomposition() const {
    std::call_once(cache_->flag, [&] { cache_->value = decompose_squares(symbol_); });
    return *cache_->value;
}

cxd bilinear_eval(const DerivationForm& d, const AnalyticPoly& f, const AnalyticPoly& g) {
    const AnalyticPoly u = u_of(f, g);
    const AnalyticPoly& h = d.symbol().poly();
    cxd s(0.0);
    const int n = std::min(u.degree(), h.degree());
    for (int k = 1; k <= n; ++k) s += u.coeff(k) * std::conj(h.coeff(k));
    return kTwoPi * s;
}

cxd b_functional(const DerivationForm& d, const AnalyticPoly& f) {
    return bilinear_eval(d, f, AnalyticPoly::constant(1.0));
}

SymbolH1 extract_symbol(const BilinearEvaluator& evaluator, int n) {
    if (n < 1) throw std::invalid_argument("extract_symbol: need N >= 1");
    const AnalyticPoly one = AnalyticPoly::constant(1.0);
    std::vector<cxd> c(n);
    for (int k = 1; k <= n; ++k)
        c[k - 1] = std::conj(evaluator(AnalyticPoly::monomial(k), one)) / kTwoPi;
    return SymbolH1::from_tail_coeffs(c);
}

ResidualReport b_factorization_residual(const DerivationForm& d, const AnalyticPoly& f,
                                        const AnalyticPoly& g) {
    const cxd lhs = bilinear_eval(d, f, g);
    const cxd rhs = b_functional(d, u_of(f, g));
    return {std::abs(lhs - rhs), 1.0 + std::abs(lhs)};
}

ResidualReport leibniz_residual(const DerivationForm& d, const AnalyticPoly& f,
                                const AnalyticPoly& g, const AnalyticPoly& k) {
    const cxd lhs = bilinear_eval(d, poly_multiply(f, g), k);
    const cxd t1 = bilinear_eval(d, f, poly_multiply(g, k));
    const cxd t2 = bilinear_eval(d, g, poly_multiply(f, k));
    return {std::abs(lhs - t1 - t2), 1.0 + std::abs(lhs) + std::abs(t1) + std::abs(t2)};
}

AnalyticPoly truncated_exp(const AnalyticPoly& a, int n_exp) {
    AnalyticPoly sum = AnalyticPoly::constant(1.0);
    AnalyticPoly term = AnalyticPoly::constant(1.0);
    for (int k = 1; k <= n_exp; ++k) {
        term = poly_multiply(term, a) * cxd(1.0 / double(k));
        sum += term;
    }
    return sum;
}

ResidualReport exp_trick_residual(const DerivationForm& d, const AnalyticPoly& a,
                                  const AnalyticPoly& g, int n_exp) {
    const double sup_a = sup_norm(a, default_sup_grid(a.degree()));
    if (sup_a > 2.0) {
        std::ostringstream msg;
        msg << "exp_trick_residual: sup|a| = " << sup_a << " exceeds 2";
        throw std::domain_error(msg.str());
    }
    const AnalyticPoly en = truncated_exp(a, n_exp);
    const cxd lhs = bilinear_eval(d, en, g);
    const cxd rhs = bilinear_eval(d, a, poly_multiply(en, g));
    return {std::abs(lhs - rhs), 1.0 + std::abs(lhs) + std::abs(rhs)};
}

GramMatrix gram_matrix(const DerivationForm& d, int n) {
    if (n < 1) throw std::invalid_argument("gram_matrix: need N >= 1");
    GramMatrix m;
    m.n = n;
    m.entries.resize(std::size_t(n + 1) * (n + 1));
    // u_of(z^j, z^k) = (j/(j+k)) z^{j+k} for j >= 1, so the entry pairs the
    // symbol coefficient at j+k directly.
    const AnalyticPoly& h = d.symbol().poly();
    for (int j = 0; j <= n; ++j)
        for (int k = 0; k <= n; ++k) {
            cxd value(0.0);
            if (j >= 1) {
                const double ratio = double(j) / double(j + k);
                value = kTwoPi * ratio * std::conj(h.coeff(j + k));
            }
            m.entries[std::size_t(j) * (n + 1) + k] = value;
        }
    return m;
}

SvdResult rank_and_singular_values(const GramMatrix& m, double tol) {
    if (tol <= 0.0) throw std::invalid_argument("rank_and_singular_values: need tol > 0");
    const int dim = m.n + 1;
    Eigen::MatrixXcd a(dim, dim);
    for (int j = 0; j < dim; ++j)
        for (int k = 0; k < dim; ++k) a(j, k) = m.at(j, k);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a);
    SvdResult out;
    out.singular_values.assign(svd.singularValues().data(),
                               svd.singularValues().data() + dim);
    const double top = out.singular_values.empty() ? 0.0 : out.singular_values.front();
    for (double s : out.singular_values)
        if (top > 0.0 && s > tol * top) ++out.rank;
    return out;
}

double norm_upper_bound(const DerivationForm& d) {
    const SquareDecomposition& dec = d.decomposition();
    return std::abs(dec.alpha) * kTwoPi + 8.0 * dec.k1.l2_norm_sq() +
           8.0 * dec.k2.l2_norm_sq();
}

double norm_lower_bound_mc(const DerivationForm& d, int samples, std::uint64_t seed,
                           int deg) {
    if (samples < 1) throw std::invalid_argument("norm_lower_bound_mc: need samples >= 1");
    if (d.symbol().is_zero()) return 0.0;
    const int grid = default_sup_grid(deg);
    double best = 0.0;
    // deterministic extremal candidate first: (f,g) = (z, 1)
    best = std::abs(bilinear_eval(d, AnalyticPoly::monomial(1), AnalyticPoly::constant(1.0)));
    for (int i = 0; i < samples; ++i) {
        const AnalyticPoly f = random_poly(deg, derive_seed(seed, 2 * i));
        const AnalyticPoly g = random_poly(deg, derive_seed(seed, 2 * i + 1));
        const double sf = sup_norm(f, grid);
        const double sg = sup_norm(g, grid);
        if (sf == 0.0 || sg == 0.0) continue;
        best = std::max(best, std::abs(bilinear_eval(d, f, g)) / (sf * sg));
    }
    return best;
}

double fejer_tail_bound(const DerivationForm& d, int n) {
    if (n < 0) throw std::invalid_argument("fejer_tail_bound: need N >= 0");
    const SymbolH1& h = d.symbol();
    if (n >= h.degree()) return 0.0;
    double bound = 0.0;
    for (int k = n + 1; k <= h.degree(); ++k) {
        if (h.coeff(k) == cxd(0.0)) continue;
        bound += norm_upper_bound(DerivationForm(SymbolH1::monomial(k, h.coeff(k))));
    }
    return bound;
}

}  // namespace discderiv
