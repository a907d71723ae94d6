#pragma once

// Plain-text run report: a key = value header carrying every tracker and
// solver parameter the run actually used (ablations show up as the effective
// delta or beta), the summary metrics and threshold curves when ground truth
// was evaluated, and a per-frame table. The boxes file is the minimal
// machine-readable output: one `x,y,w,h` line per predicted frame.

#include <sskcf/eval.hpp>

#include <iomanip>
#include <ostream>
#include <string>
#include <vector>

namespace sskcf {

struct RunSummary {
    std::string sequence;
    int frames = 0;
    int predicted = 0;
    double fps = 0.0;
    unsigned long seed = 0;
    std::string ablation = "none";
    TrackerConfig cfg;
    std::vector<Box> boxes;
    bool evaluated = false;
    MetricsReport metrics;
    std::vector<EvalRecord> records;
};

namespace detail {

inline void write_curve(std::ostream& out, const char* key, const std::vector<double>& curve) {
    out << key << " = ";
    for (std::size_t i = 0; i < curve.size(); ++i) out << (i ? "," : "") << curve[i];
    out << '\n';
}

}  // namespace detail

inline void write_report(std::ostream& out, const RunSummary& run) {
    const TrackerConfig& cfg = run.cfg;
    out << std::setprecision(10);
    out << "sequence = " << run.sequence << '\n';
    out << "frames = " << run.frames << '\n';
    out << "predicted = " << run.predicted << '\n';
    out << "fps = " << run.fps << '\n';
    out << "seed = " << run.seed << '\n';
    out << "ablation = " << run.ablation << '\n';
    out << "padding = " << cfg.padding << '\n';
    out << "canonical_size = " << cfg.canonical_size << '\n';
    out << "cell_size = " << cfg.hog.cell_size << '\n';
    out << "orientations = " << cfg.hog.orientations << '\n';
    out << "hog_channels = " << cfg.hog.channels << '\n';
    out << "hist_bins = " << cfg.hist_bins << '\n';
    out << "label_gain = " << cfg.label_gain << '\n';
    out << "label_eta_scale = " << cfg.label_eta_scale << '\n';
    out << "label_exponent = " << cfg.label_exponent << '\n';
    out << "theta_lower = " << cfg.theta_lower << '\n';
    out << "theta_upper = " << cfg.theta_upper << '\n';
    out << "kernel = " << (cfg.solver.kernel.type == KernelType::gaussian ? "gaussian" : "linear")
        << '\n';
    out << "sigma = " << cfg.solver.kernel.sigma << '\n';
    out << "C = " << cfg.solver.C << '\n';
    out << "delta = " << cfg.solver.delta << '\n';
    out << "beta = " << cfg.solver.beta << '\n';
    out << "kappa = " << cfg.solver.kappa << '\n';
    out << "tau = " << cfg.solver.tau << '\n';
    out << "max_iter_first = " << cfg.solver.max_iter_first << '\n';
    out << "max_iter_update = " << cfg.solver.max_iter_update << '\n';
    out << "psr_threshold = " << cfg.psr_threshold << '\n';
    out << "sim_threshold = " << cfg.sim_threshold << '\n';
    out << "learning_rate = " << cfg.learning_rate << '\n';
    out << "fusion_mix = " << cfg.fusion_mix << '\n';
    out << "sim_gamma = " << cfg.sim_gamma << '\n';
    out << "scale_smoothing = " << cfg.scale_smoothing << '\n';

    if (run.evaluated) {
        out << "dp20 = " << run.metrics.dp20 << '\n';
        out << "op50 = " << run.metrics.op50 << '\n';
        out << "auc = " << run.metrics.auc << '\n';
        out << "mean_iou = " << run.metrics.mean_iou << '\n';
        out << "mean_cle = " << run.metrics.mean_cle << '\n';
        detail::write_curve(out, "precision", run.metrics.precision);
        detail::write_curve(out, "success", run.metrics.success);
        out << "# frame, x, y, w, h, gt_x, gt_y, gt_w, gt_h, iou, cle\n";
        for (const EvalRecord& r : run.records)
            out << r.frame << ", " << r.predicted.x << ", " << r.predicted.y << ", "
                << r.predicted.w << ", " << r.predicted.h << ", " << r.truth.x << ", "
                << r.truth.y << ", " << r.truth.w << ", " << r.truth.h << ", " << r.overlap
                << ", " << r.cle << '\n';
    } else {
        out << "# frame, x, y, w, h\n";
        for (std::size_t i = 0; i < run.boxes.size(); ++i)
            out << (i + 2) << ", " << run.boxes[i].x << ", " << run.boxes[i].y << ", "
                << run.boxes[i].w << ", " << run.boxes[i].h << '\n';
    }
}

inline void write_boxes(std::ostream& out, const std::vector<Box>& boxes) {
    out << std::setprecision(10);
    for (const Box& b : boxes) out << b.x << ',' << b.y << ',' << b.w << ',' << b.h << '\n';
}

}  // namespace sskcf
