#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "hypermoment/common.hpp"

namespace hypermoment {

using cplx = std::complex<double>;

namespace detail {

/// In-place iterative radix-2 transform; n must be a power of two.
/// sign = -1 gives the usual forward FFT, +1 the unnormalized inverse.
inline void fft_pow2(std::vector<cplx>& a, int sign) {
    const size_t n = a.size();
    for (size_t i = 1, j = 0; i < n; ++i) {
        size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (size_t len = 2; len <= n; len <<= 1) {
        double ang = sign * 2.0 * std::numbers::pi / static_cast<double>(len);
        cplx wl(std::cos(ang), std::sin(ang));
        for (size_t i = 0; i < n; i += len) {
            cplx w(1.0);
            for (size_t j = 0; j < len / 2; ++j) {
                cplx u = a[i + j];
                cplx v = a[i + j + len / 2] * w;
                a[i + j] = u + v;
                a[i + j + len / 2] = u - v;
                w *= wl;
            }
        }
    }
}

inline size_t next_pow2(size_t n) {
    size_t m = 1;
    while (m < n) m <<= 1;
    return m;
}

}  // namespace detail

/// Arbitrary-length DFT by the chirp-transform (Bluestein) reduction to a
/// power-of-two convolution:  X[k] = sum_n x[n] e^{sign 2 pi i nk / N}.
/// Cost O(N log N) for any N, including prime N.
inline std::vector<cplx> czt_dft(const std::vector<cplx>& x, int sign) {
    const size_t n = x.size();
    if (n == 0) return {};
    if (n == 1) return x;

    // nk = (n^2 + k^2 - (k-n)^2) / 2, so X[k] = w^{k^2/2} sum_n (x[n] w^{n^2/2}) w^{-(k-n)^2/2}
    // with w = e^{sign 2 pi i / N}.  Quadratic exponents are reduced mod 2N
    // before evaluating, so the angle never loses precision.
    const i64 two_n = static_cast<i64>(2 * n);
    std::vector<cplx> chirp(n);
    for (size_t j = 0; j < n; ++j) {
        i64 e = static_cast<i64>(static_cast<i128>(j) * j % two_n);
        double ang = sign * std::numbers::pi * static_cast<double>(e) / static_cast<double>(n);
        chirp[j] = cplx(std::cos(ang), std::sin(ang));
    }

    const size_t m = detail::next_pow2(2 * n - 1);
    std::vector<cplx> a(m, cplx(0.0)), b(m, cplx(0.0));
    for (size_t j = 0; j < n; ++j) a[j] = x[j] * chirp[j];
    b[0] = std::conj(chirp[0]);
    for (size_t j = 1; j < n; ++j) b[j] = b[m - j] = std::conj(chirp[j]);

    detail::fft_pow2(a, -1);
    detail::fft_pow2(b, -1);
    for (size_t j = 0; j < m; ++j) a[j] *= b[j];
    detail::fft_pow2(a, +1);

    std::vector<cplx> out(n);
    const double scale = 1.0 / static_cast<double>(m);
    for (size_t k = 0; k < n; ++k) out[k] = a[k] * scale * chirp[k];
    return out;
}

/// Quadratic-time DFT, kept as the cross-validation oracle for czt_dft.
inline std::vector<cplx> dft_direct(const std::vector<cplx>& x, int sign) {
    const size_t n = x.size();
    std::vector<cplx> out(n, cplx(0.0));
    for (size_t k = 0; k < n; ++k) {
        for (size_t j = 0; j < n; ++j) {
            i64 e = static_cast<i64>(static_cast<i128>(j) * k % static_cast<i64>(n));
            double ang = sign * 2.0 * std::numbers::pi * static_cast<double>(e) / static_cast<double>(n);
            out[k] += x[j] * cplx(std::cos(ang), std::sin(ang));
        }
    }
    return out;
}

}  // namespace hypermoment
