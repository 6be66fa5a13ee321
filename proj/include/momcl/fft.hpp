#pragma once

#include <complex>
#include <vector>

#include "momcl/errors.hpp"
#include "momcl/real.hpp"

namespace momcl {

[[nodiscard]] constexpr bool is_power_of_two(std::size_t n) {
    return n != 0 && (n & (n - 1)) == 0;
}

namespace detail {

/// Iterative radix-2 Cooley-Tukey, in place.  sign = -1 forward, +1 inverse.
inline void fft_radix2(std::vector<std::complex<double>>& a, int sign) {
    const std::size_t n = a.size();
    if (!is_power_of_two(n)) throw size_mismatch_error("fft: length must be a power of two");
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = sign * 2.0 * pi_v<double>() / static_cast<double>(len);
        const std::complex<double> wl(std::cos(ang), std::sin(ang));
        for (std::size_t i = 0; i < n; i += len) {
            std::complex<double> w(1.0, 0.0);
            for (std::size_t k = 0; k < len / 2; ++k) {
                const std::complex<double> u = a[i + k];
                const std::complex<double> v = a[i + k + len / 2] * w;
                a[i + k] = u + v;
                a[i + k + len / 2] = u - v;
                w *= wl;
            }
        }
    }
}

} // namespace detail

/// Forward DFT, unnormalized: X_m = sum_j x_j exp(-2*pi*i*j*m/n).
[[nodiscard]] inline std::vector<std::complex<double>> fft_forward(std::vector<std::complex<double>> x) {
    detail::fft_radix2(x, -1);
    return x;
}

/// Inverse DFT carrying the 1/n factor, so fft_inverse(fft_forward(x)) == x.
[[nodiscard]] inline std::vector<std::complex<double>> fft_inverse(std::vector<std::complex<double>> x) {
    detail::fft_radix2(x, +1);
    const double s = 1.0 / static_cast<double>(x.size());
    for (auto& v : x) v *= s;
    return x;
}

[[nodiscard]] inline std::vector<std::complex<double>> fft_forward_real(const std::vector<double>& x) {
    std::vector<std::complex<double>> c(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) c[i] = x[i];
    return fft_forward(std::move(c));
}

/// Inverse DFT of a conjugate-symmetric spectrum; the imaginary residue is
/// discarded after the caller has had a chance to check it.
[[nodiscard]] inline std::vector<double> fft_inverse_real(std::vector<std::complex<double>> x) {
    x = fft_inverse(std::move(x));
    std::vector<double> out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i].real();
    return out;
}

/// Signed integer mode index of spectral bin m on an n-point grid.
[[nodiscard]] inline int mode_index(std::size_t m, std::size_t n) {
    return m <= n / 2 ? static_cast<int>(m) : static_cast<int>(m) - static_cast<int>(n);
}

/// Physical frequency xi_m = 2*pi*mode/L of spectral bin m.
[[nodiscard]] inline double mode_frequency(std::size_t m, std::size_t n, double domain_length) {
    return 2.0 * pi_v<double>() * mode_index(m, n) / domain_length;
}

} // namespace momcl
