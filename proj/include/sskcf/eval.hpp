#pragma once

// Benchmark bookkeeping: axis-aligned boxes in the 1-based file convention,
// per-frame overlap and center-error records, and the summary metrics
// (distance precision, overlap precision, and the two threshold curves whose
// mean gives the area under the success curve).

#include <sskcf/tracker.hpp>

#include <cmath>
#include <stdexcept>
#include <vector>

namespace sskcf {

// Top-left corner plus size, with (1, 1) the first pixel as ground-truth
// files store it. The tracker's own boxes are 0-based; convert explicitly.
struct Box {
    double x = 0.0;
    double y = 0.0;
    double w = 0.0;
    double h = 0.0;
};

inline BoundingBox to_tracker(const Box& b) { return {b.x - 1.0, b.y - 1.0, b.w, b.h}; }
inline Box from_tracker(const BoundingBox& b) { return {b.x + 1.0, b.y + 1.0, b.w, b.h}; }

inline double iou(const Box& a, const Box& b) {
    if (a.w <= 0.0 || a.h <= 0.0 || b.w <= 0.0 || b.h <= 0.0)
        throw std::invalid_argument("iou: boxes must have positive size");
    const double ix = std::max(0.0, std::min(a.x + a.w, b.x + b.w) - std::max(a.x, b.x));
    const double iy = std::max(0.0, std::min(a.y + a.h, b.y + b.h) - std::max(a.y, b.y));
    const double inter = ix * iy;
    return inter / (a.w * a.h + b.w * b.h - inter);
}

inline double center_error(const Box& a, const Box& b) {
    return std::hypot((a.x + a.w / 2.0) - (b.x + b.w / 2.0),
                      (a.y + a.h / 2.0) - (b.y + b.h / 2.0));
}

struct EvalRecord {
    int frame = 0;
    Box predicted;
    Box truth;
    double overlap = 0.0;
    double cle = 0.0;
};

inline EvalRecord evaluate_frame(int frame, const Box& predicted, const Box& truth) {
    return {frame, predicted, truth, iou(predicted, truth), center_error(predicted, truth)};
}

// Precision samples thresholds 0..50 px in 1 px steps; success samples
// overlap thresholds 0..1 in 0.05 steps. Both comparisons are strict, so a
// center error of exactly 20 px does not count toward DP@20.
struct MetricsReport {
    double dp20 = 0.0;
    double op50 = 0.0;
    double auc = 0.0;
    double mean_iou = 0.0;
    double mean_cle = 0.0;
    std::vector<double> precision;
    std::vector<double> success;
};

inline MetricsReport compute_metrics(const std::vector<EvalRecord>& records) {
    if (records.empty()) throw std::invalid_argument("compute_metrics: no records");
    MetricsReport out;
    const double n = static_cast<double>(records.size());
    std::vector<int> under_cle(51, 0);
    std::vector<int> over_iou(21, 0);
    double sum_iou = 0.0, sum_cle = 0.0;
    for (const EvalRecord& r : records) {
        sum_iou += r.overlap;
        sum_cle += r.cle;
        for (int t = 0; t <= 50; ++t)
            if (r.cle < static_cast<double>(t)) ++under_cle[t];
        for (int t = 0; t <= 20; ++t)
            if (r.overlap > 0.05 * t) ++over_iou[t];
    }
    out.mean_iou = sum_iou / n;
    out.mean_cle = sum_cle / n;
    out.precision.resize(51);
    out.success.resize(21);
    for (int t = 0; t <= 50; ++t) out.precision[t] = under_cle[t] / n;
    for (int t = 0; t <= 20; ++t) out.success[t] = over_iou[t] / n;
    out.dp20 = out.precision[20];
    out.op50 = out.success[10];
    double area = 0.0;
    for (double s : out.success) area += s;
    out.auc = area / static_cast<double>(out.success.size());
    return out;
}

}  // namespace sskcf
