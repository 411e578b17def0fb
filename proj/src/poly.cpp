#include "discderiv/poly.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace discderiv {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

AnalyticPoly::AnalyticPoly(std::vector<cxd> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) coeffs_.assign(1, cxd(0.0));
    if (coeffs_.size() > (1u << 20))
        throw std::invalid_argument("AnalyticPoly: degree beyond desk scale");
}

AnalyticPoly AnalyticPoly::monomial(int n, cxd c) {
    if (n < 0) throw std::invalid_argument("monomial: negative exponent");
    std::vector<cxd> v(n + 1, cxd(0.0));
    v[n] = c;
    return AnalyticPoly(std::move(v));
}

AnalyticPoly AnalyticPoly::constant(cxd c) { return AnalyticPoly({c}); }

bool AnalyticPoly::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](cxd c) { return c == cxd(0.0); });
}

cxd AnalyticPoly::operator()(cxd z) const {
    cxd acc(0.0);
    for (int n = degree(); n >= 0; --n) acc = acc * z + coeffs_[n];
    return acc;
}

AnalyticPoly AnalyticPoly::derivative() const {
    if (degree() == 0) return AnalyticPoly();
    std::vector<cxd> v(coeffs_.size() - 1);
    for (std::size_t n = 1; n < coeffs_.size(); ++n)
        v[n - 1] = double(n) * coeffs_[n];
    return AnalyticPoly(std::move(v));
}

AnalyticPoly AnalyticPoly::truncated(int max_degree) const {
    if (max_degree < 0) return AnalyticPoly();
    std::vector<cxd> v(coeffs_.begin(),
                       coeffs_.begin() + std::min<std::size_t>(coeffs_.size(), max_degree + 1));
    return AnalyticPoly(std::move(v));
}

AnalyticPoly AnalyticPoly::shifted(int k) const {
    if (k < 0) throw std::invalid_argument("shifted: negative shift");
    std::vector<cxd> v(coeffs_.size() + k, cxd(0.0));
    std::copy(coeffs_.begin(), coeffs_.end(), v.begin() + k);
    return AnalyticPoly(std::move(v));
}

double AnalyticPoly::l2_norm_sq() const {
    double s = 0.0;
    for (cxd c : coeffs_) s += std::norm(c);
    return kTwoPi * s;
}

double AnalyticPoly::l2_norm() const { return std::sqrt(l2_norm_sq()); }

double AnalyticPoly::coeff_abs_sum() const {
    double s = 0.0;
    for (cxd c : coeffs_) s += std::abs(c);
    return s;
}

AnalyticPoly& AnalyticPoly::operator+=(const AnalyticPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), cxd(0.0));
    for (std::size_t n = 0; n < rhs.coeffs_.size(); ++n) coeffs_[n] += rhs.coeffs_[n];
    return *this;
}

AnalyticPoly& AnalyticPoly::operator-=(const AnalyticPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), cxd(0.0));
    for (std::size_t n = 0; n < rhs.coeffs_.size(); ++n) coeffs_[n] -= rhs.coeffs_[n];
    return *this;
}

AnalyticPoly& AnalyticPoly::operator*=(cxd s) {
    for (auto& c : coeffs_) c *= s;
    return *this;
}

AnalyticPoly poly_multiply(const AnalyticPoly& p, const AnalyticPoly& q) {
    const auto& a = p.coeffs();
    const auto& b = q.coeffs();
    std::vector<cxd> out(a.size() + b.size() - 1, cxd(0.0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == cxd(0.0)) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return AnalyticPoly(std::move(out));
}

AnalyticPoly operator*(const AnalyticPoly& p, const AnalyticPoly& q) {
    return poly_multiply(p, q);
}

AnalyticPoly u_of(const AnalyticPoly& f, const AnalyticPoly& g) {
    const AnalyticPoly w = poly_multiply(f.derivative(), g);
    if (w.is_zero()) return AnalyticPoly();
    std::vector<cxd> v(w.coeffs().size() + 1, cxd(0.0));
    for (std::size_t m = 0; m < w.coeffs().size(); ++m)
        v[m + 1] = w.coeffs()[m] / double(m + 1);
    return AnalyticPoly(std::move(v));
}

BoundaryGrid BoundaryGrid::sample(const AnalyticPoly& p, int m) {
    if (!is_pow2(m)) throw std::invalid_argument("BoundaryGrid: size must be a power of two");
    if (p.degree() >= m)
        throw std::invalid_argument("BoundaryGrid: grid smaller than coefficient count");
    std::vector<cxd> data(m, cxd(0.0));
    std::copy(p.coeffs().begin(), p.coeffs().end(), data.begin());
    // values_j = Σ c_n exp(+2πi nj/M) is the unscaled inverse transform
    fft(data, true);
    for (auto& x : data) x *= double(m);
    BoundaryGrid grid;
    grid.size = m;
    grid.samples = std::move(data);
    return grid;
}

AnalyticPoly BoundaryGrid::to_poly(int max_degree) const {
    if (max_degree >= size)
        throw std::invalid_argument("BoundaryGrid::to_poly: degree must be < grid size");
    std::vector<cxd> data = samples;
    fft(data, false);
    const double scale = 1.0 / double(size);
    std::vector<cxd> v(max_degree + 1);
    for (int n = 0; n <= max_degree; ++n) v[n] = data[n] * scale;
    return AnalyticPoly(std::move(v));
}

namespace {

std::vector<cxd> boundary_values(const AnalyticPoly& p, int m) {
    if (is_pow2(m) && p.degree() < m) return BoundaryGrid::sample(p, m).samples;
    std::vector<cxd> vals(m);
    for (int j = 0; j < m; ++j) {
        const double th = kTwoPi * double(j) / double(m);
        vals[j] = p(cxd(std::cos(th), std::sin(th)));
    }
    return vals;
}

}  // namespace

double sup_norm(const AnalyticPoly& p, int m) {
    if (m < 4 * (p.degree() + 1))
        throw std::invalid_argument("sup_norm: grid size must be >= 4*(deg+1)");
    double best = 0.0;
    for (cxd v : boundary_values(p, m)) best = std::max(best, std::abs(v));
    return best;
}

double sup_norm_upper(const AnalyticPoly& p, int m) {
    const double slack = std::numbers::pi * double(p.degree()) / double(m);
    if (slack >= 0.5)
        throw std::invalid_argument("sup_norm_upper: grid too coarse for Bernstein bound");
    return sup_norm(p, m) / (1.0 - slack);
}

int default_sup_grid(int degree) {
    return next_pow2(std::max(1024, 8 * (degree + 1)));
}

double lp_norm(const AnalyticPoly& p, int exponent, double rel_tol) {
    if (exponent == 2) return p.l2_norm();
    if (exponent != 1) throw std::invalid_argument("lp_norm: exponent must be 1 or 2");
    if (p.is_zero()) return 0.0;

    auto trapezoid = [&p](int m) {
        double s = 0.0;
        for (cxd v : boundary_values(p, m)) s += std::abs(v);
        return s * kTwoPi / double(m);
    };

    int m = next_pow2(std::max(512, 8 * (p.degree() + 1)));
    double prev = trapezoid(m);
    constexpr int kMaxGrid = 1 << 22;
    while (m < kMaxGrid) {
        m <<= 1;
        const double cur = trapezoid(m);
        if (std::abs(cur - prev) <= rel_tol * std::max(std::abs(cur), 1e-300)) return cur;
        prev = cur;
    }
    return prev;
}

}  // namespace discderiv
