#pragma once

// Confidence map over the feature grid and the ternary label assignment
// derived from it. Distances are cyclic so labels respect the wraparound
// structure of the shifted training samples.

#include <sskcf/grid.hpp>

#include <cmath>
#include <stdexcept>
#include <vector>

namespace sskcf {

struct ConfidenceMap {
    RealGrid scores;
    double gain = 1.0;
    double eta = 1.0;
    double exponent = 2.0;
};

struct LabelGrid {
    int rows = 0;
    int cols = 0;
    std::vector<int> v;

    LabelGrid() = default;
    LabelGrid(int r, int c) : rows(r), cols(c), v(static_cast<std::size_t>(r) * c, 0) {
        if (r < 1 || c < 1) throw std::invalid_argument("LabelGrid: dimensions must be >= 1");
    }

    int& at(int m, int n) { return v[static_cast<std::size_t>(m) * cols + n]; }
    int at(int m, int n) const { return v[static_cast<std::size_t>(m) * cols + n]; }
    int size() const { return rows * cols; }
};

inline RealGrid label_real(const LabelGrid& y) {
    RealGrid out(y.rows, y.cols);
    for (int i = 0; i < y.size(); ++i) out.v[i] = static_cast<double>(y.v[i]);
    return out;
}

inline double cyclic_distance(int m, int n, int center_m, int center_n, int rows, int cols) {
    int dm = std::abs(m - center_m);
    dm = std::min(dm, rows - dm);
    int dn = std::abs(n - center_n);
    dn = std::min(dn, cols - dn);
    return std::sqrt(static_cast<double>(dm) * dm + static_cast<double>(dn) * dn);
}

inline ConfidenceMap confidence_map(int rows, int cols, int center_m, int center_n, double gain,
                                    double eta, double exponent) {
    if (gain <= 0.0 || eta <= 0.0 || exponent <= 0.0)
        throw std::invalid_argument("confidence_map: gain, eta, and exponent must be positive");
    if (center_m < 0 || center_m >= rows || center_n < 0 || center_n >= cols)
        throw std::invalid_argument("confidence_map: center outside the grid");
    ConfidenceMap out{RealGrid(rows, cols), gain, eta, exponent};
    for (int m = 0; m < rows; ++m)
        for (int n = 0; n < cols; ++n) {
            double d = cyclic_distance(m, n, center_m, center_n, rows, cols);
            out.scores.at(m, n) = gain * std::exp(-eta * std::pow(d, exponent));
        }
    return out;
}

inline LabelGrid assign_labels(const ConfidenceMap& c, double theta_l, double theta_u) {
    if (!(theta_l > 0.0) || theta_l >= theta_u || theta_u > c.gain)
        throw std::invalid_argument("assign_labels: need 0 < theta_l < theta_u <= gain");
    LabelGrid out(c.scores.rows, c.scores.cols);
    for (int i = 0; i < out.size(); ++i) {
        double s = c.scores.v[i];
        out.v[i] = s >= theta_u ? 1 : (s <= theta_l ? -1 : 0);
    }
    return out;
}

}  // namespace sskcf
