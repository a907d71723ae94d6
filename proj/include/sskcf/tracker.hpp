#pragma once

// Per-frame tracking state machine: aspect-driven part layout, per-part
// correlation detection with PSR and appearance reliability gating, weighted
// translation fusion, pairwise-distance scale estimation, and the adaptive
// model update that re-solves the joint filter over the reliable parts.

#include <sskcf/features.hpp>
#include <sskcf/image.hpp>
#include <sskcf/labeling.hpp>
#include <sskcf/solver.hpp>
#include <sskcf/spectral.hpp>

#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace sskcf {

// Axis-aligned box, top-left corner in 0-based pixel coordinates.
struct BoundingBox {
    double x = 0.0;
    double y = 0.0;
    double w = 0.0;
    double h = 0.0;
};

struct PartLayout {
    int count = 0;
    int rows = 0;
    int cols = 0;
    std::vector<std::array<double, 2>> offsets;  // part centers, fractions of (w, h)
    double frac_w = 1.0;                         // part size, fraction of the target
    double frac_h = 1.0;
};

inline PartLayout make_layout(double w, double h) {
    if (w <= 0.0 || h <= 0.0) throw std::invalid_argument("make_layout: non-positive size");
    const double r = w / h;
    PartLayout out;
    if (r > 0.6 && r < 1.6) {
        out.count = 4;
        out.rows = 2;
        out.cols = 2;
        out.frac_w = 0.5;
        out.frac_h = 0.5;
        out.offsets = {{{-0.25, -0.25}}, {{0.25, -0.25}}, {{-0.25, 0.25}}, {{0.25, 0.25}}};
    } else if (r <= 0.6) {
        out.count = 3;
        out.rows = 3;
        out.cols = 1;
        out.frac_w = 1.0;
        out.frac_h = 1.0 / 3.0;
        out.offsets = {{{0.0, -1.0 / 3.0}}, {{0.0, 0.0}}, {{0.0, 1.0 / 3.0}}};
    } else {
        out.count = 3;
        out.rows = 1;
        out.cols = 3;
        out.frac_w = 1.0 / 3.0;
        out.frac_h = 1.0;
        out.offsets = {{{-1.0 / 3.0, 0.0}}, {{0.0, 0.0}}, {{1.0 / 3.0, 0.0}}};
    }
    return out;
}

struct TrackerConfig {
    double padding = 1.8;
    double psr_threshold = 5.5;
    double sim_threshold = 0.2;
    double learning_rate = 0.015;
    double fusion_mix = 0.4;
    double sim_gamma = 0.5;
    double scale_smoothing = 0.6;
    int canonical_size = 48;
    double label_gain = 1.0;
    double label_eta_scale = 0.1;
    double label_exponent = 2.0;
    double theta_lower = 0.4;
    double theta_upper = 0.9;
    int hist_bins = 8;
    SolverConfig solver;
    HogConfig hog;
};

struct PartState {
    PartSolution model;
    MultiChannelGrid x;       // training template on the padded canonical grid
    MultiSpectralGrid x_hat;  // cached spectra of x
    ColorHistogram hist;
    double base_w = 0.0;  // unscaled part box, pixels
    double base_h = 0.0;
    double px = 0.0;  // current center, pixels
    double py = 0.0;
    double prev_px = 0.0;  // center before this frame's detection
    double prev_py = 0.0;
    double dx = 0.0;  // this frame's detected displacement, pixels
    double dy = 0.0;
    double psr = 0.0;
    double sim = 1.0;
    bool reliable = true;
    double pi = 0.0;
    double rho = 0.0;
    double omega = 1.0;
};

struct TrackerState {
    TrackerConfig cfg;
    double cx = 0.0;  // fused target center, pixels
    double cy = 0.0;
    double init_w = 0.0;
    double init_h = 0.0;
    double scale = 1.0;
    PartLayout layout;
    std::vector<PartState> parts;
    double prev_dx = 0.0;  // last fused translation, reused when no part is reliable
    double prev_dy = 0.0;
    LabelGrid labels;  // shared training labels on the canonical grid
};

// Side length of the padded training/search patch, rounded to whole cells.
inline int padded_canonical(const TrackerConfig& cfg) {
    const int cell = cfg.hog.cell_size;
    int p = static_cast<int>(std::lround(cfg.canonical_size * cfg.padding / cell)) * cell;
    return std::max(p, cell);
}

inline MultiChannelGrid crop_features(const PixelView& frame, double cx, double cy, double w,
                                      double h, const TrackerConfig& cfg) {
    const int P = padded_canonical(cfg);
    Image patch = crop_resample(frame, cx, cy, w, h, P, P);
    return apply_window(extract_hog(patch.view(), cfg.hog));
}

inline ColorHistogram part_histogram(const PixelView& frame, double cx, double cy, double w,
                                     double h, const TrackerConfig& cfg) {
    Image patch = crop_resample(frame, cx, cy, w, h, cfg.canonical_size, cfg.canonical_size);
    return color_histogram(patch.view(), cfg.hist_bins);
}

inline double appearance_similarity(const ColorHistogram& a, const ColorHistogram& b,
                                    double gamma) {
    if (a.bins.size() != b.bins.size() || a.bins_per_channel != b.bins_per_channel)
        throw std::invalid_argument("appearance_similarity: binning mismatch");
    if (gamma <= 0.0) throw std::invalid_argument("appearance_similarity: gamma must be positive");
    double dist2 = 0.0;
    for (std::size_t i = 0; i < a.bins.size(); ++i) {
        double d = a.bins[i] - b.bins[i];
        dist2 += d * d;
    }
    return std::exp(-dist2 / (gamma * gamma));
}

// (peak - mean) / std of the response; 0 on a flat map, which carries no
// localization evidence.
inline double peak_to_sidelobe(const RealGrid& response) {
    double peak = response.v[0], mean = 0.0;
    for (double s : response.v) {
        peak = std::max(peak, s);
        mean += s;
    }
    mean /= response.size();
    double var = 0.0;
    for (double s : response.v) var += (s - mean) * (s - mean);
    double sd = std::sqrt(var / response.size());
    if (sd < 1e-12) return 0.0;
    return (peak - mean) / sd;
}

struct PartDetection {
    RealGrid response;
    double dx = 0.0;  // pixels
    double dy = 0.0;
    double psr = 0.0;
};

// Crops the padded search region at the part's current center (scaled by the
// previous frame's S), correlates it against the stored template, and reads
// the displacement off the argmax with shifts beyond half the grid wrapping
// to negative.
inline PartDetection detect_part(const PartState& part, const PixelView& frame,
                                 const TrackerConfig& cfg, double scale) {
    if (part.x.depth() == 0 || part.model.alpha_hat.size() == 0)
        throw std::invalid_argument("detect_part: part has no trained model");
    const int P = padded_canonical(cfg);
    const double crop_w = part.base_w * cfg.padding * scale;
    const double crop_h = part.base_h * cfg.padding * scale;
    MultiChannelGrid z = crop_features(frame, part.px, part.py, crop_w, crop_h, cfg);
    SpectralGrid kxz = kernel_spectrum(part.x_hat, dft2(z), cfg.solver.kernel);
    SpectralGrid prod(kxz.rows, kxz.cols);
    for (int i = 0; i < prod.size(); ++i) prod.v[i] = kxz.v[i] * part.model.alpha_hat.v[i];

    PartDetection out;
    out.response = idft2(prod);
    for (double& s : out.response.v) s += part.model.b;

    const int M = out.response.rows, N = out.response.cols;
    int best = 0;
    for (int i = 1; i < out.response.size(); ++i)
        if (out.response.v[i] > out.response.v[best]) best = i;
    int bm = best / N, bn = best % N;
    if (bm > M / 2) bm -= M;
    if (bn > N / 2) bn -= N;
    out.dx = bn * cfg.hog.cell_size * (crop_w / P);
    out.dy = bm * cfg.hog.cell_size * (crop_h / P);
    out.psr = peak_to_sidelobe(out.response);
    return out;
}

struct Fusion {
    double dx = 0.0;
    double dy = 0.0;
    int reliable_count = 0;
    std::vector<double> pi;
};

// Mixes normalized PSR and appearance weights over the reliable parts; with
// no reliable part the previous frame's fused translation is reused.
inline Fusion fuse_translation(const std::vector<PartState>& parts, double prev_dx,
                               double prev_dy, double mix) {
    if (mix < 0.0 || mix > 1.0)
        throw std::invalid_argument("fuse_translation: mix must lie in [0, 1]");
    Fusion out;
    out.pi.assign(parts.size(), 0.0);
    double sum_phi = 0.0, sum_sim = 0.0;
    for (const auto& p : parts)
        if (p.reliable) {
            ++out.reliable_count;
            sum_phi += p.psr;
            sum_sim += p.sim;
        }
    if (out.reliable_count == 0) {
        out.dx = prev_dx;
        out.dy = prev_dy;
        return out;
    }
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (!parts[i].reliable) continue;
        double phi_term = sum_phi > 0.0 ? parts[i].psr / sum_phi : 1.0 / out.reliable_count;
        double sim_term = sum_sim > 0.0 ? parts[i].sim / sum_sim : 1.0 / out.reliable_count;
        out.pi[i] = (1.0 - mix) * phi_term + mix * sim_term;
        out.dx += out.pi[i] * parts[i].dx;
        out.dy += out.pi[i] * parts[i].dy;
    }
    return out;
}

// Mean over ordered reliable pairs of the current/previous center-distance
// ratio, folded into the running scale by exponential smoothing. Pairs that
// were coincident in the previous frame are skipped; with fewer than two
// reliable parts (or no usable pair) the previous scale is kept.
inline double estimate_scale(const std::vector<PartState>& parts, double s_prev,
                             double smoothing) {
    if (s_prev <= 0.0) throw std::invalid_argument("estimate_scale: scale must be positive");
    if (smoothing < 0.0 || smoothing > 1.0)
        throw std::invalid_argument("estimate_scale: smoothing must lie in [0, 1]");
    double acc = 0.0;
    int pairs = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (!parts[i].reliable) continue;
        for (std::size_t j = 0; j < parts.size(); ++j) {
            if (j == i || !parts[j].reliable) continue;
            double prev = std::hypot(parts[i].prev_px - parts[j].prev_px,
                                     parts[i].prev_py - parts[j].prev_py);
            if (prev < 1e-12) continue;
            double cur = std::hypot(parts[i].px - parts[j].px, parts[i].py - parts[j].py);
            acc += cur / prev;
            ++pairs;
        }
    }
    if (pairs == 0) return s_prev;
    double raw = s_prev * (acc / pairs);
    return (1.0 - smoothing) * s_prev + smoothing * raw;
}

namespace detail {

// omega for each listed part against the dummy root formed from the stored
// weights: recovered primal filters for the linear kernel, dual coefficients
// as the proxy for the kernelized one. solve_joint requires weights in
// (0, 1], and filter distances can underflow the gaussian to an exact zero,
// so weights are floored; a floored part is effectively decoupled.
constexpr double kOmegaFloor = 1e-3;

inline std::vector<double> coupling_weights(const std::vector<const PartState*>& parts,
                                            const SolverConfig& scfg) {
    const std::size_t L = parts.size();
    std::vector<double> out(L, 1.0);
    if (L == 0) return out;
    double total = 0.0;
    for (const PartState* p : parts) total += p->omega;
    if (total <= 0.0) total = static_cast<double>(L);

    if (scfg.kernel.type == KernelType::gaussian) {
        SpectralGrid root(parts[0]->model.alpha_hat.rows, parts[0]->model.alpha_hat.cols);
        for (std::size_t l = 0; l < L; ++l)
            for (int i = 0; i < root.size(); ++i)
                root.v[i] += parts[l]->omega * parts[l]->model.alpha_hat.v[i];
        for (auto& v : root.v) v /= total;
        for (std::size_t l = 0; l < L; ++l)
            out[l] = std::max(compute_omega(parts[l]->model.alpha_hat, root, scfg.kappa),
                              kOmegaFloor);
        return out;
    }

    std::vector<MultiSpectralGrid> filters(L);
    for (std::size_t l = 0; l < L; ++l) {
        const PartState& p = *parts[l];
        filters[l].reserve(p.x_hat.size());
        for (const SpectralGrid& ch : p.x_hat) {
            SpectralGrid w(ch.rows, ch.cols);
            for (int i = 0; i < w.size(); ++i)
                w.v[i] = 0.5 * std::conj(ch.v[i]) * p.model.alpha_hat.v[i];
            filters[l].push_back(std::move(w));
        }
    }
    MultiSpectralGrid root(filters[0].size(),
                           SpectralGrid(filters[0][0].rows, filters[0][0].cols));
    for (std::size_t l = 0; l < L; ++l)
        for (std::size_t c = 0; c < root.size(); ++c)
            for (int i = 0; i < root[c].size(); ++i)
                root[c].v[i] += parts[l]->omega * filters[l][c].v[i];
    for (auto& ch : root)
        for (auto& v : ch.v) v /= total;
    for (std::size_t l = 0; l < L; ++l)
        out[l] = std::max(compute_omega(filters[l], root, scfg.kappa), kOmegaFloor);
    return out;
}

}  // namespace detail

// Blends templates, histograms, and dual coefficients of the reliable parts
// toward this frame's measurements and re-solves the joint filter over them,
// warm started from the current models. Unreliable parts are left untouched.
inline void update_models(std::vector<PartState>& parts, const TrackerConfig& cfg,
                          const PixelView& frame, double scale, const LabelGrid& labels) {
    std::vector<std::size_t> live;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (!parts[i].reliable) {
            parts[i].rho = 0.0;
            continue;
        }
        parts[i].rho = parts[i].pi * cfg.learning_rate;
        live.push_back(i);
    }
    if (live.empty()) return;

    for (std::size_t i : live) {
        PartState& p = parts[i];
        MultiChannelGrid fresh = crop_features(frame, p.px, p.py, p.base_w * cfg.padding * scale,
                                               p.base_h * cfg.padding * scale, cfg);
        for (int c = 0; c < p.x.depth(); ++c)
            for (int k = 0; k < p.x.channels[c].size(); ++k)
                p.x.channels[c].v[k] =
                    (1.0 - p.rho) * p.x.channels[c].v[k] + p.rho * fresh.channels[c].v[k];
        ColorHistogram hist = part_histogram(frame, p.px, p.py, p.base_w * scale,
                                             p.base_h * scale, cfg);
        for (std::size_t k = 0; k < p.hist.bins.size(); ++k)
            p.hist.bins[k] = (1.0 - p.rho) * p.hist.bins[k] + p.rho * hist.bins[k];
        p.x_hat = dft2(p.x);
    }

    std::vector<const PartState*> live_parts;
    for (std::size_t i : live) live_parts.push_back(&parts[i]);
    std::vector<double> omegas = detail::coupling_weights(live_parts, cfg.solver);

    std::vector<PartTrainingInput> inputs;
    std::vector<PartSolution> warm;
    for (std::size_t k = 0; k < live.size(); ++k) {
        PartState& p = parts[live[k]];
        inputs.push_back({p.x, labels, p.model.alpha_hat, omegas[k]});
        warm.push_back(p.model);
    }
    std::vector<PartSolution> solved = solve_joint(inputs, cfg.solver, &warm);
    for (std::size_t k = 0; k < live.size(); ++k) {
        PartState& p = parts[live[k]];
        p.omega = omegas[k];
        for (int i = 0; i < p.model.alpha_hat.size(); ++i)
            p.model.alpha_hat.v[i] =
                (1.0 - p.rho) * p.model.alpha_hat.v[i] + p.rho * solved[k].alpha_hat.v[i];
        p.model.b = (1.0 - p.rho) * p.model.b + p.rho * solved[k].b;
        p.model.v = std::move(solved[k].v);
        p.model.q = std::move(solved[k].q);
    }
}

inline BoundingBox current_box(const TrackerState& st) {
    const double w = st.init_w * st.scale, h = st.init_h * st.scale;
    return {st.cx - w / 2.0, st.cy - h / 2.0, w, h};
}

inline TrackerState init_track(const PixelView& frame, const BoundingBox& box,
                               const TrackerConfig& cfg) {
    if (frame.empty()) throw std::invalid_argument("init_track: empty frame");
    if (box.w <= 0.0 || box.h <= 0.0 || box.x < 0.0 || box.y < 0.0 ||
        box.x + box.w > frame.width || box.y + box.h > frame.height)
        throw std::invalid_argument("init_track: box outside the frame");

    TrackerState st;
    st.cfg = cfg;
    st.layout = make_layout(box.w, box.h);
    st.cx = box.x + box.w / 2.0;
    st.cy = box.y + box.h / 2.0;
    st.init_w = box.w;
    st.init_h = box.h;

    const double part_w = st.layout.frac_w * box.w;
    const double part_h = st.layout.frac_h * box.h;
    if (part_w < cfg.hog.cell_size || part_h < cfg.hog.cell_size)
        throw std::invalid_argument("init_track: box too small for one feature cell per part");

    const int G = padded_canonical(cfg) / cfg.hog.cell_size;
    const double eta = cfg.label_eta_scale * std::sqrt(static_cast<double>(G) * G);
    st.labels = assign_labels(confidence_map(G, G, 0, 0, cfg.label_gain, eta, cfg.label_exponent),
                              cfg.theta_lower, cfg.theta_upper);

    std::vector<PartTrainingInput> inputs;
    for (int l = 0; l < st.layout.count; ++l) {
        PartState p;
        p.base_w = part_w;
        p.base_h = part_h;
        p.px = st.cx + st.layout.offsets[l][0] * box.w;
        p.py = st.cy + st.layout.offsets[l][1] * box.h;
        p.prev_px = p.px;
        p.prev_py = p.py;
        p.x = crop_features(frame, p.px, p.py, part_w * cfg.padding, part_h * cfg.padding, cfg);
        p.x_hat = dft2(p.x);
        p.hist = part_histogram(frame, p.px, p.py, part_w, part_h, cfg);
        p.pi = 1.0 / st.layout.count;
        p.rho = cfg.learning_rate * p.pi;
        st.parts.push_back(std::move(p));
    }
    for (const auto& p : st.parts) inputs.push_back({p.x, st.labels, SpectralGrid{}, 1.0});
    std::vector<PartSolution> solved = solve_joint(inputs, cfg.solver);
    for (int l = 0; l < st.layout.count; ++l) st.parts[l].model = std::move(solved[l]);
    for (auto& p : st.parts) p.psr = detect_part(p, frame, cfg, 1.0).psr;
    return st;
}

// One tracking step: anchor parts to the last fused box, detect each part,
// gate reliability, fuse the translation, update the scale from part
// distances, then adapt the models at the new anchors.
inline BoundingBox step(TrackerState& st, const PixelView& frame) {
    if (frame.empty()) throw std::invalid_argument("step: empty frame");
    const TrackerConfig& cfg = st.cfg;

    for (int l = 0; l < st.layout.count; ++l) {
        PartState& p = st.parts[l];
        p.px = st.cx + st.layout.offsets[l][0] * st.init_w * st.scale;
        p.py = st.cy + st.layout.offsets[l][1] * st.init_h * st.scale;
        p.prev_px = p.px;
        p.prev_py = p.py;
    }

    for (auto& p : st.parts) {
        PartDetection det = detect_part(p, frame, cfg, st.scale);
        p.dx = det.dx;
        p.dy = det.dy;
        p.psr = det.psr;
        ColorHistogram hist = part_histogram(frame, p.px + p.dx, p.py + p.dy,
                                             p.base_w * st.scale, p.base_h * st.scale, cfg);
        p.sim = appearance_similarity(hist, p.hist, cfg.sim_gamma);
        p.reliable = p.psr > cfg.psr_threshold || p.sim > cfg.sim_threshold;
    }

    Fusion fused = fuse_translation(st.parts, st.prev_dx, st.prev_dy, cfg.fusion_mix);
    for (std::size_t i = 0; i < st.parts.size(); ++i) st.parts[i].pi = fused.pi[i];
    st.cx += fused.dx;
    st.cy += fused.dy;
    st.prev_dx = fused.dx;
    st.prev_dy = fused.dy;

    for (auto& p : st.parts) {
        p.px += p.dx;
        p.py += p.dy;
    }
    st.scale = estimate_scale(st.parts, st.scale, cfg.scale_smoothing);

    for (int l = 0; l < st.layout.count; ++l) {
        PartState& p = st.parts[l];
        p.px = st.cx + st.layout.offsets[l][0] * st.init_w * st.scale;
        p.py = st.cy + st.layout.offsets[l][1] * st.init_h * st.scale;
    }
    update_models(st.parts, cfg, frame, st.scale, st.labels);
    return current_box(st);
}

}  // namespace sskcf
