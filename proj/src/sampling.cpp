#include "discderiv/sampling.hpp"

#include <cmath>
#include <numbers>

namespace discderiv {

std::uint64_t GaussianSampler::next_u64() {
    // splitmix64
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

double GaussianSampler::uniform01() {
    return double((next_u64() >> 11) + 1) * 0x1.0p-53;
}

double GaussianSampler::normal() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    const double u1 = uniform01();
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
}

cxd GaussianSampler::complex_normal() {
    const double re = normal();
    const double im = normal();
    return cxd(re, im) * std::sqrt(0.5);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    GaussianSampler mix(seed ^ (0xD1B54A32D192ED03ULL * (index + 1)));
    return mix.next_u64();
}

AnalyticPoly random_poly(int degree, std::uint64_t seed) {
    GaussianSampler rng(seed);
    std::vector<cxd> c(degree + 1);
    for (auto& x : c) x = rng.complex_normal();
    return AnalyticPoly(std::move(c));
}

AnalyticPoly random_poly_sup_normalized(int degree, std::uint64_t seed, int grid) {
    AnalyticPoly p = random_poly(degree, seed);
    if (grid <= 0) grid = default_sup_grid(degree);
    const double s = sup_norm(p, grid);
    if (s == 0.0) return p;
    return p * cxd(1.0 / s);
}

}  // namespace discderiv
