#pragma once

// Feature extraction: 31-channel HOG grids for filter learning/detection,
// joint color histograms for the appearance-similarity gate, and the Hann
// taper applied before every transform into the Fourier domain.

#include <sskcf/grid.hpp>
#include <sskcf/image.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace sskcf {

struct HogConfig {
    int cell_size = 4;
    int orientations = 9;
    int channels = 31;
};

struct ColorHistogram {
    std::vector<double> bins;
    int bins_per_channel = 8;
};

// 31-channel HOG: 18 contrast-sensitive orientation channels, 9 insensitive
// ones, and 4 texture-energy channels. Gradients use clamped central
// differences on the dominant color channel; pixels vote into the four
// neighboring cells with bilinear weights; per-cell normalization runs over
// the four 2x2 neighborhoods with truncation at 0.2. Output grid is
// floor(H/cell) x floor(W/cell).
inline MultiChannelGrid extract_hog(const PixelView& img, const HogConfig& cfg) {
    if (cfg.cell_size < 1) throw std::invalid_argument("extract_hog: cell_size must be >= 1");
    if (cfg.orientations != 9 || cfg.channels != 31)
        throw std::invalid_argument("extract_hog: only the 31-channel, 9-orientation variant is implemented");
    if (img.empty()) throw std::invalid_argument("extract_hog: empty region");
    const int cell = cfg.cell_size;
    const int cells_y = img.height / cell;
    const int cells_x = img.width / cell;
    if (cells_y < 1 || cells_x < 1)
        throw std::invalid_argument("extract_hog: region smaller than one cell");

    const int O = cfg.orientations;
    const int OS = 2 * O;
    double uu[9], vv[9];
    for (int o = 0; o < O; ++o) {
        uu[o] = std::cos(std::numbers::pi * o / O);
        vv[o] = std::sin(std::numbers::pi * o / O);
    }

    std::vector<double> hist(static_cast<std::size_t>(cells_y) * cells_x * OS, 0.0);
    auto hist_at = [&](int cy, int cx, int o) -> double& {
        return hist[(static_cast<std::size_t>(cy) * cells_x + cx) * OS + o];
    };

    const int vis_x = cells_x * cell, vis_y = cells_y * cell;
    for (int y = 0; y < vis_y; ++y) {
        int yl = std::max(y - 1, 0), yh = std::min(y + 1, img.height - 1);
        for (int x = 0; x < vis_x; ++x) {
            int xl = std::max(x - 1, 0), xh = std::min(x + 1, img.width - 1);
            double gx = 0.0, gy = 0.0, mag2 = -1.0;
            for (int c = 0; c < img.channels; ++c) {
                double dx = double(img.at(xh, y, c)) - double(img.at(xl, y, c));
                double dy = double(img.at(x, yh, c)) - double(img.at(x, yl, c));
                double m2 = dx * dx + dy * dy;
                if (m2 > mag2) {
                    mag2 = m2;
                    gx = dx;
                    gy = dy;
                }
            }
            double mag = std::sqrt(mag2);
            int bin = 0;
            double best = 0.0;
            for (int o = 0; o < O; ++o) {
                double dot = uu[o] * gx + vv[o] * gy;
                if (dot > best) {
                    best = dot;
                    bin = o;
                } else if (-dot > best) {
                    best = -dot;
                    bin = o + O;
                }
            }

            double xp = (x + 0.5) / cell - 0.5;
            double yp = (y + 0.5) / cell - 0.5;
            int ixp = static_cast<int>(std::floor(xp));
            int iyp = static_cast<int>(std::floor(yp));
            double vx1 = xp - ixp, vx0 = 1.0 - vx1;
            double vy1 = yp - iyp, vy0 = 1.0 - vy1;
            if (ixp >= 0 && iyp >= 0) hist_at(iyp, ixp, bin) += mag * vx0 * vy0;
            if (ixp + 1 < cells_x && iyp >= 0) hist_at(iyp, ixp + 1, bin) += mag * vx1 * vy0;
            if (ixp >= 0 && iyp + 1 < cells_y) hist_at(iyp + 1, ixp, bin) += mag * vx0 * vy1;
            if (ixp + 1 < cells_x && iyp + 1 < cells_y)
                hist_at(iyp + 1, ixp + 1, bin) += mag * vx1 * vy1;
        }
    }

    std::vector<double> norm(static_cast<std::size_t>(cells_y) * cells_x, 0.0);
    for (int cy = 0; cy < cells_y; ++cy)
        for (int cx = 0; cx < cells_x; ++cx) {
            double acc = 0.0;
            for (int o = 0; o < O; ++o) {
                double s = hist_at(cy, cx, o) + hist_at(cy, cx, o + O);
                acc += s * s;
            }
            norm[static_cast<std::size_t>(cy) * cells_x + cx] = acc;
        }
    auto norm_at = [&](int cy, int cx) {
        cy = std::clamp(cy, 0, cells_y - 1);
        cx = std::clamp(cx, 0, cells_x - 1);
        return norm[static_cast<std::size_t>(cy) * cells_x + cx];
    };

    const double trunc = 0.2;
    const double texture_gain = 1.0 / std::sqrt(18.0);
    std::vector<RealGrid> out(cfg.channels, RealGrid(cells_y, cells_x));
    for (int cy = 0; cy < cells_y; ++cy)
        for (int cx = 0; cx < cells_x; ++cx) {
            double n[4];
            n[0] = 1.0 / std::sqrt(norm_at(cy, cx) + norm_at(cy, cx + 1) + norm_at(cy + 1, cx) +
                                   norm_at(cy + 1, cx + 1) + 1e-10);
            n[1] = 1.0 / std::sqrt(norm_at(cy, cx) + norm_at(cy, cx - 1) + norm_at(cy + 1, cx) +
                                   norm_at(cy + 1, cx - 1) + 1e-10);
            n[2] = 1.0 / std::sqrt(norm_at(cy, cx) + norm_at(cy, cx + 1) + norm_at(cy - 1, cx) +
                                   norm_at(cy - 1, cx + 1) + 1e-10);
            n[3] = 1.0 / std::sqrt(norm_at(cy, cx) + norm_at(cy, cx - 1) + norm_at(cy - 1, cx) +
                                   norm_at(cy - 1, cx - 1) + 1e-10);
            double texture[4] = {0.0, 0.0, 0.0, 0.0};
            for (int o = 0; o < OS; ++o) {
                double h = hist_at(cy, cx, o);
                double acc = 0.0;
                for (int k = 0; k < 4; ++k) {
                    double t = std::min(h * n[k], trunc);
                    acc += t;
                    texture[k] += t;
                }
                out[o].at(cy, cx) = 0.5 * acc;
            }
            for (int o = 0; o < O; ++o) {
                double h = hist_at(cy, cx, o) + hist_at(cy, cx, o + O);
                double acc = 0.0;
                for (int k = 0; k < 4; ++k) acc += std::min(h * n[k], trunc);
                out[OS + o].at(cy, cx) = 0.5 * acc;
            }
            for (int k = 0; k < 4; ++k) out[OS + O + k].at(cy, cx) = texture_gain * texture[k];
        }
    return MultiChannelGrid(std::move(out));
}

// Joint color histogram over an even binning of RGB space, L1-normalized.
// Grayscale input replicates its channel to all three.
inline ColorHistogram color_histogram(const PixelView& img, int bins_per_channel = 8) {
    if (img.empty()) throw std::invalid_argument("color_histogram: empty region");
    if (bins_per_channel < 1 || bins_per_channel > 256)
        throw std::invalid_argument("color_histogram: bad bin count");
    if (img.channels != 1 && img.channels != 3)
        throw std::invalid_argument("color_histogram: expects 1- or 3-channel input");
    const int b = bins_per_channel;
    ColorHistogram out{std::vector<double>(static_cast<std::size_t>(b) * b * b, 0.0), b};
    for (int y = 0; y < img.height; ++y)
        for (int x = 0; x < img.width; ++x) {
            int r, g, bl;
            if (img.channels == 1) {
                r = g = bl = img.at(x, y, 0);
            } else {
                r = img.at(x, y, 0);
                g = img.at(x, y, 1);
                bl = img.at(x, y, 2);
            }
            int idx = ((r * b) >> 8) * b * b + ((g * b) >> 8) * b + ((bl * b) >> 8);
            out.bins[idx] += 1.0;
        }
    const double total = static_cast<double>(img.width) * img.height;
    for (auto& v : out.bins) v /= total;
    return out;
}

inline std::vector<double> hann_window(int n) {
    std::vector<double> w(n, 1.0);
    if (n > 1)
        for (int i = 0; i < n; ++i)
            w[i] = 0.5 * (1.0 - std::cos(2.0 * std::numbers::pi * i / (n - 1)));
    return w;
}

// Separable Hann taper applied per channel.
inline MultiChannelGrid apply_window(const MultiChannelGrid& g) {
    std::vector<double> wr = hann_window(g.rows());
    std::vector<double> wc = hann_window(g.cols());
    std::vector<RealGrid> out;
    out.reserve(g.channels.size());
    for (const auto& ch : g.channels) {
        RealGrid w(ch.rows, ch.cols);
        for (int m = 0; m < ch.rows; ++m)
            for (int n = 0; n < ch.cols; ++n) w.at(m, n) = ch.at(m, n) * wr[m] * wc[n];
        out.push_back(std::move(w));
    }
    return MultiChannelGrid(std::move(out));
}

}  // namespace sskcf
