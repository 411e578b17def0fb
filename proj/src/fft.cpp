#include "discderiv/fft.hpp"

#include <numbers>
#include <stdexcept>

namespace discderiv {

bool is_pow2(int n) { return n > 0 && (n & (n - 1)) == 0; }

int next_pow2(int n) {
    int m = 1;
    while (m < n) m <<= 1;
    return m;
}

void fft(std::vector<cxd>& data, bool inverse) {
    const std::size_t n = data.size();
    if (n == 0) return;
    if (!is_pow2(static_cast<int>(n)))
        throw std::invalid_argument("fft: size must be a power of two");

    // bit-reversal permutation
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(data[i], data[j]);
    }

    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = 2.0 * std::numbers::pi / double(len) * (inverse ? 1.0 : -1.0);
        const cxd wl(std::cos(ang), std::sin(ang));
        for (std::size_t i = 0; i < n; i += len) {
            cxd w(1.0, 0.0);
            for (std::size_t k = 0; k < len / 2; ++k) {
                const cxd u = data[i + k];
                const cxd v = data[i + k + len / 2] * w;
                data[i + k] = u + v;
                data[i + k + len / 2] = u - v;
                w *= wl;
            }
        }
    }

    if (inverse) {
        const double scale = 1.0 / double(n);
        for (auto& x : data) x *= scale;
    }
}

}  // namespace discderiv
