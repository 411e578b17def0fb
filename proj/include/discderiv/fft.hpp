#pragma once

#include <complex>
#include <vector>

namespace discderiv {

using cxd = std::complex<double>;

bool is_pow2(int n);
int next_pow2(int n);

/// In-place radix-2 FFT, forward convention X_k = sum_j x_j exp(-2πi jk/n).
/// The inverse transform includes the 1/n factor. n must be a power of two.
void fft(std::vector<cxd>& data, bool inverse);

}  // namespace discderiv
