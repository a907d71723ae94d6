#pragma once

// Grid containers shared by the spectral math, feature extraction, and the
// solver. Grids are dense row-major arrays indexed (m, n) = (row, col).

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace sskcf {

struct RealGrid {
    int rows = 0;
    int cols = 0;
    std::vector<double> v;

    RealGrid() = default;
    RealGrid(int r, int c, double fill = 0.0)
        : rows(r), cols(c), v(static_cast<std::size_t>(r) * static_cast<std::size_t>(c), fill) {
        if (r < 1 || c < 1) throw std::invalid_argument("RealGrid: dimensions must be >= 1");
    }

    double& at(int m, int n) { return v[static_cast<std::size_t>(m) * cols + n]; }
    double at(int m, int n) const { return v[static_cast<std::size_t>(m) * cols + n]; }
    int size() const { return rows * cols; }
    bool same_shape(const RealGrid& o) const { return rows == o.rows && cols == o.cols; }
};

struct SpectralGrid {
    int rows = 0;
    int cols = 0;
    std::vector<std::complex<double>> v;

    SpectralGrid() = default;
    SpectralGrid(int r, int c, std::complex<double> fill = {})
        : rows(r), cols(c), v(static_cast<std::size_t>(r) * static_cast<std::size_t>(c), fill) {
        if (r < 1 || c < 1) throw std::invalid_argument("SpectralGrid: dimensions must be >= 1");
    }

    std::complex<double>& at(int m, int n) { return v[static_cast<std::size_t>(m) * cols + n]; }
    std::complex<double> at(int m, int n) const { return v[static_cast<std::size_t>(m) * cols + n]; }
    int size() const { return rows * cols; }
    bool same_shape(const SpectralGrid& o) const { return rows == o.rows && cols == o.cols; }
};

struct MultiChannelGrid {
    std::vector<RealGrid> channels;

    MultiChannelGrid() = default;
    explicit MultiChannelGrid(std::vector<RealGrid> ch) : channels(std::move(ch)) {
        if (channels.empty()) throw std::invalid_argument("MultiChannelGrid: needs at least one channel");
        for (const auto& c : channels)
            if (!c.same_shape(channels.front()))
                throw std::invalid_argument("MultiChannelGrid: channels must share one shape");
    }

    int depth() const { return static_cast<int>(channels.size()); }
    int rows() const { return channels.empty() ? 0 : channels.front().rows; }
    int cols() const { return channels.empty() ? 0 : channels.front().cols; }
    bool same_shape(const MultiChannelGrid& o) const {
        return depth() == o.depth() && rows() == o.rows() && cols() == o.cols();
    }
};

using MultiSpectralGrid = std::vector<SpectralGrid>;

}  // namespace sskcf
