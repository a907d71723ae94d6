#pragma once

// 2-D DFT wrappers plus the circulant and kernel-correlation spectra that
// every closed form in the solver and tracker is built from. FFTW backs the
// transforms (unnormalized forward, 1/(M*N) inverse); plans are cached per
// shape and direction behind a mutex, execution is lock-free.

#include <sskcf/grid.hpp>

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace sskcf {

namespace detail {

inline fftw_plan dft_plan(int rows, int cols, int sign) {
    static std::map<std::tuple<int, int, int>, fftw_plan> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_tuple(rows, cols, sign);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    std::vector<std::complex<double>> probe(static_cast<std::size_t>(rows) * cols);
    auto* raw = reinterpret_cast<fftw_complex*>(probe.data());
    fftw_plan plan = fftw_plan_dft_2d(rows, cols, raw, raw, sign, FFTW_ESTIMATE | FFTW_UNALIGNED);
    if (!plan) throw std::runtime_error("dft_plan: fftw plan creation failed");
    cache.emplace(key, plan);
    return plan;
}

inline void execute_inplace(std::vector<std::complex<double>>& buf, int rows, int cols, int sign) {
    fftw_plan plan = dft_plan(rows, cols, sign);
    auto* raw = reinterpret_cast<fftw_complex*>(buf.data());
    fftw_execute_dft(plan, raw, raw);
}

}  // namespace detail

inline SpectralGrid dft2(const RealGrid& g) {
    SpectralGrid out(g.rows, g.cols);
    for (std::size_t i = 0; i < g.v.size(); ++i) out.v[i] = {g.v[i], 0.0};
    detail::execute_inplace(out.v, g.rows, g.cols, FFTW_FORWARD);
    return out;
}

inline MultiSpectralGrid dft2(const MultiChannelGrid& g) {
    MultiSpectralGrid out;
    out.reserve(g.channels.size());
    for (const auto& c : g.channels) out.push_back(dft2(c));
    return out;
}

inline RealGrid idft2(const SpectralGrid& s) {
    std::vector<std::complex<double>> buf = s.v;
    detail::execute_inplace(buf, s.rows, s.cols, FFTW_BACKWARD);
    RealGrid out(s.rows, s.cols);
    const double scale = 1.0 / (static_cast<double>(s.rows) * s.cols);
    for (std::size_t i = 0; i < buf.size(); ++i) out.v[i] = buf[i].real() * scale;
    return out;
}

inline RealGrid circ_shift(const RealGrid& g, int dm, int dn) {
    const int M = g.rows, N = g.cols;
    RealGrid out(M, N);
    for (int m = 0; m < M; ++m)
        for (int n = 0; n < N; ++n) {
            int sm = ((m - dm) % M + M) % M;
            int sn = ((n - dn) % N + N) % N;
            out.at(m, n) = g.at(sm, sn);
        }
    return out;
}

// Spectrum of the linear cross-correlation k^{xz}: sum_c conj(x_hat_c) o z_hat_c.
inline SpectralGrid linear_kernel_spectrum(const MultiSpectralGrid& xs, const MultiSpectralGrid& zs) {
    if (xs.empty() || xs.size() != zs.size())
        throw std::invalid_argument("linear_kernel_spectrum: channel count mismatch");
    SpectralGrid out(xs.front().rows, xs.front().cols);
    for (std::size_t c = 0; c < xs.size(); ++c) {
        if (!xs[c].same_shape(out) || !zs[c].same_shape(out))
            throw std::invalid_argument("linear_kernel_spectrum: shape mismatch");
        for (int i = 0; i < out.size(); ++i) out.v[i] += std::conj(xs[c].v[i]) * zs[c].v[i];
    }
    return out;
}

inline SpectralGrid linear_kernel_spectrum(const MultiChannelGrid& x, const MultiChannelGrid& z) {
    if (!x.same_shape(z)) throw std::invalid_argument("linear_kernel_spectrum: shape mismatch");
    return linear_kernel_spectrum(dft2(x), dft2(z));
}

// Spectrum of the Gaussian cross-correlation k^{xz}[m,n] =
// exp(-(|x|^2 + |z|^2 - 2 * idft2(linear)[m,n]) / (sigma^2 * D * M * N)).
// Squared norms are recovered from the spectra via Parseval; the distance is
// clamped at zero so rounding never pushes a kernel value above 1.
inline SpectralGrid gaussian_kernel_spectrum(const MultiSpectralGrid& xs, const MultiSpectralGrid& zs,
                                             double sigma) {
    if (sigma <= 0.0) throw std::invalid_argument("gaussian_kernel_spectrum: sigma must be positive");
    if (xs.empty() || xs.size() != zs.size())
        throw std::invalid_argument("gaussian_kernel_spectrum: channel count mismatch");
    const int M = xs.front().rows, N = xs.front().cols;
    const int D = static_cast<int>(xs.size());
    const double mn = static_cast<double>(M) * N;
    double norm_x = 0.0, norm_z = 0.0;
    for (int c = 0; c < D; ++c) {
        for (const auto& b : xs[c].v) norm_x += std::norm(b);
        for (const auto& b : zs[c].v) norm_z += std::norm(b);
    }
    norm_x /= mn;
    norm_z /= mn;
    RealGrid corr = idft2(linear_kernel_spectrum(xs, zs));
    RealGrid kmap(M, N);
    const double denom = sigma * sigma * D * mn;
    for (int i = 0; i < kmap.size(); ++i)
        kmap.v[i] = std::exp(-std::max(0.0, norm_x + norm_z - 2.0 * corr.v[i]) / denom);
    return dft2(kmap);
}

inline SpectralGrid gaussian_kernel_spectrum(const MultiChannelGrid& x, const MultiChannelGrid& z,
                                             double sigma) {
    if (!x.same_shape(z)) throw std::invalid_argument("gaussian_kernel_spectrum: shape mismatch");
    return gaussian_kernel_spectrum(dft2(x), dft2(z), sigma);
}

struct DenseMatrix {
    int n = 0;
    std::vector<double> a;

    DenseMatrix() = default;
    explicit DenseMatrix(int n_) : n(n_), a(static_cast<std::size_t>(n_) * n_, 0.0) {}
    double& at(int r, int c) { return a[static_cast<std::size_t>(r) * n + c]; }
    double at(int r, int c) const { return a[static_cast<std::size_t>(r) * n + c]; }
};

// Explicit circulant matrix of x in the convolution arrangement,
// X[(m,n),(p,q)] = x[(m-p) mod M, (n-q) mod N], so X * flatten(v) is the
// circular convolution x (*) v and the eigenvalues are the dft2(x) bins.
// Oracle use only; guarded to small grids.
inline DenseMatrix dense_circulant(const RealGrid& x) {
    const int M = x.rows, N = x.cols, MN = M * N;
    if (MN > 256) throw std::invalid_argument("dense_circulant: grid exceeds the 256-element guard");
    DenseMatrix out(MN);
    for (int m = 0; m < M; ++m)
        for (int n = 0; n < N; ++n)
            for (int p = 0; p < M; ++p)
                for (int q = 0; q < N; ++q) {
                    int sm = ((m - p) % M + M) % M;
                    int sn = ((n - q) % N + N) % N;
                    out.at(m * N + n, p * N + q) = x.at(sm, sn);
                }
    return out;
}

}  // namespace sskcf
