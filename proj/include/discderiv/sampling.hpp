#pragma once

#include <cstdint>

#include "discderiv/poly.hpp"

namespace discderiv {

/// Deterministic stream of standard normals (splitmix64 + Box–Muller);
/// identical output for identical seeds on a given platform.
class GaussianSampler {
  public:
    explicit GaussianSampler(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next_u64();
    double uniform01();  // in (0,1]
    double normal();
    cxd complex_normal();  // E|.|^2 = 1

  private:
    std::uint64_t state_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

/// Derived per-sample seed so (seed, index) -> stream is order-independent.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

/// Coefficients i.i.d. complex Gaussian, c_0..c_degree.
AnalyticPoly random_poly(int degree, std::uint64_t seed);

/// Same, then divided by the grid sup norm (grid = default_sup_grid unless given).
AnalyticPoly random_poly_sup_normalized(int degree, std::uint64_t seed, int grid = 0);

}  // namespace discderiv
