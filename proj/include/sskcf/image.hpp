#pragma once

// 8-bit image buffers plus the bilinear crop/resample used to map part
// regions onto canonical patches. Samples outside the frame replicate the
// nearest edge pixel. Continuous coordinates put pixel (i, j)'s center at
// (i + 0.5, j + 0.5).

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace sskcf {

struct PixelView {
    const std::uint8_t* data = nullptr;
    int width = 0;
    int height = 0;
    int channels = 0;
    std::ptrdiff_t stride = 0;

    std::uint8_t at(int x, int y, int c) const {
        return data[static_cast<std::size_t>(y) * stride +
                    static_cast<std::size_t>(x) * channels + c];
    }
    bool empty() const { return !data || width < 1 || height < 1 || channels < 1; }
};

struct Image {
    int width = 0;
    int height = 0;
    int channels = 0;
    std::vector<std::uint8_t> pixels;

    Image() = default;
    Image(int w, int h, int c)
        : width(w), height(h), channels(c),
          pixels(static_cast<std::size_t>(w) * h * c, 0) {
        if (w < 1 || h < 1 || c < 1) throw std::invalid_argument("Image: bad dimensions");
    }

    std::uint8_t& at(int x, int y, int c) {
        return pixels[(static_cast<std::size_t>(y) * width + x) * channels + c];
    }
    std::uint8_t at(int x, int y, int c) const {
        return pixels[(static_cast<std::size_t>(y) * width + x) * channels + c];
    }
    PixelView view() const {
        return {pixels.data(), width, height, channels,
                static_cast<std::ptrdiff_t>(width) * channels};
    }
};

inline double sample_bilinear(const PixelView& img, double x, double y, int c) {
    double sx = x - 0.5, sy = y - 0.5;
    int x0 = static_cast<int>(std::floor(sx));
    int y0 = static_cast<int>(std::floor(sy));
    double fx = sx - x0, fy = sy - y0;
    int x0c = std::clamp(x0, 0, img.width - 1);
    int x1c = std::clamp(x0 + 1, 0, img.width - 1);
    int y0c = std::clamp(y0, 0, img.height - 1);
    int y1c = std::clamp(y0 + 1, 0, img.height - 1);
    double top = (1.0 - fx) * img.at(x0c, y0c, c) + fx * img.at(x1c, y0c, c);
    double bot = (1.0 - fx) * img.at(x0c, y1c, c) + fx * img.at(x1c, y1c, c);
    return (1.0 - fy) * top + fy * bot;
}

// Crop the (w x h) region centered at (cx, cy) and resample it to
// (out_w x out_h) with bilinear interpolation and edge replication.
inline Image crop_resample(const PixelView& src, double cx, double cy, double w, double h,
                           int out_w, int out_h) {
    if (src.empty()) throw std::invalid_argument("crop_resample: empty source");
    if (w <= 0.0 || h <= 0.0) throw std::invalid_argument("crop_resample: non-positive region");
    if (out_w < 1 || out_h < 1) throw std::invalid_argument("crop_resample: bad output size");
    Image out(out_w, out_h, src.channels);
    const double left = cx - w / 2.0, top = cy - h / 2.0;
    const double sx = w / out_w, sy = h / out_h;
    for (int j = 0; j < out_h; ++j)
        for (int i = 0; i < out_w; ++i) {
            double px = left + (i + 0.5) * sx;
            double py = top + (j + 0.5) * sy;
            for (int c = 0; c < src.channels; ++c) {
                double v = sample_bilinear(src, px, py, c);
                out.at(i, j, c) =
                    static_cast<std::uint8_t>(std::clamp(std::lround(v), 0L, 255L));
            }
        }
    return out;
}

}  // namespace sskcf
