#pragma once

// Joint solver for the per-part dual coefficients: every part's squared-hinge
// SVM over cyclic shifts is coupled to a dummy root part (the omega-weighted
// mean of all coefficients) and anchored to its previous-frame solution, and
// the whole system is solved by alternating closed-form updates in the
// Fourier domain (alpha_r -> v -> q -> b -> alpha until the iterates settle).

#include <sskcf/grid.hpp>
#include <sskcf/labeling.hpp>
#include <sskcf/spectral.hpp>

#include <cmath>
#include <stdexcept>
#include <vector>

namespace sskcf {

enum class KernelType { linear, gaussian };

struct KernelSpec {
    KernelType type = KernelType::gaussian;
    double sigma = 0.5;
};

struct SolverConfig {
    double C = 1e4;
    double delta = 0.05;
    double beta = 5.0;
    double kappa = 3.0;
    double tau = 1e-3;
    int max_iter_first = 5;
    int max_iter_update = 3;
    KernelSpec kernel;
};

// One part's training inputs. update_alpha treats an empty alpha_prev as a
// zero temporal anchor; solve_joint substitutes its own starting coefficients
// instead, so a first-frame solve stays anchored at its initialization.
struct PartTrainingInput {
    MultiChannelGrid x;
    LabelGrid y;
    SpectralGrid alpha_prev;
    double omega = 1.0;
};

struct PartSolution {
    SpectralGrid alpha_hat;
    double b = 0.0;
    RealGrid v;
    RealGrid q;
};

struct SolveStats {
    int iterations = 0;
    bool converged = false;
    double final_change = 0.0;
};

inline SpectralGrid kernel_spectrum(const MultiSpectralGrid& xs, const MultiSpectralGrid& zs,
                                    const KernelSpec& kernel) {
    return kernel.type == KernelType::linear ? linear_kernel_spectrum(xs, zs)
                                             : gaussian_kernel_spectrum(xs, zs, kernel.sigma);
}

inline SpectralGrid kernel_autospectrum(const MultiSpectralGrid& xs, const KernelSpec& kernel) {
    return kernel_spectrum(xs, xs, kernel);
}

inline SpectralGrid kernel_autospectrum(const MultiChannelGrid& x, const KernelSpec& kernel) {
    return kernel_autospectrum(dft2(x), kernel);
}

inline double update_b(const RealGrid& q) {
    double acc = 0.0;
    for (double x : q.v) acc += x;
    return acc / q.size();
}

inline RealGrid update_q(const LabelGrid& y, const RealGrid& v) {
    if (y.rows != v.rows || y.cols != v.cols)
        throw std::invalid_argument("update_q: shape mismatch");
    RealGrid q(v.rows, v.cols);
    for (int i = 0; i < q.size(); ++i) q.v[i] = y.v[i] + y.v[i] * v.v[i];
    return q;
}

namespace detail {

inline RealGrid update_v_spectral(const SpectralGrid& kxx, const SpectralGrid& alpha_hat, double b,
                                  const LabelGrid& y) {
    if (!kxx.same_shape(alpha_hat) || kxx.rows != y.rows || kxx.cols != y.cols)
        throw std::invalid_argument("update_v: shape mismatch");
    SpectralGrid prod(kxx.rows, kxx.cols);
    for (int i = 0; i < prod.size(); ++i) prod.v[i] = kxx.v[i] * alpha_hat.v[i];
    RealGrid resp = idft2(prod);
    RealGrid v(kxx.rows, kxx.cols);
    for (int i = 0; i < v.size(); ++i)
        v.v[i] = std::max(y.v[i] * (0.5 * resp.v[i] + b) - 1.0, 0.0);
    return v;
}

// Fourier closed form for the alpha update. The delta*omega and beta terms
// are skipped entirely when their coefficient is exactly zero so the reduced
// problems match the independent solves bit for bit.
inline SpectralGrid update_alpha_spectral(const SpectralGrid& kxx, const RealGrid& q, double b,
                                          const SpectralGrid& alpha_r,
                                          const SpectralGrid& alpha_prev, double delta_omega,
                                          double beta, double C) {
    const int M = kxx.rows, N = kxx.cols;
    SpectralGrid num = dft2(q);
    num.at(0, 0) -= b * static_cast<double>(M) * N;
    double scalar = 1.0 / (2.0 * C);
    if (delta_omega != 0.0) {
        if (!alpha_r.same_shape(kxx))
            throw std::invalid_argument("update_alpha: alpha_r shape mismatch");
        for (int i = 0; i < num.size(); ++i) num.v[i] -= delta_omega * alpha_r.v[i];
        scalar -= delta_omega;
    }
    if (beta != 0.0) {
        scalar -= beta;
        if (alpha_prev.size() > 0) {
            if (!alpha_prev.same_shape(kxx))
                throw std::invalid_argument("update_alpha: alpha_prev shape mismatch");
            for (int i = 0; i < num.size(); ++i) num.v[i] -= beta * alpha_prev.v[i];
        }
    }
    SpectralGrid out(M, N);
    for (int i = 0; i < out.size(); ++i) {
        std::complex<double> den = 0.5 * kxx.v[i] + scalar;
        if (std::abs(den) < 1e-12)
            throw std::runtime_error("update_alpha: singular denominator bin");
        out.v[i] = num.v[i] / den;
    }
    return out;
}

// Root-mean-square change of the spatial dual coefficients, evaluated from
// the spectra through Parseval so no inverse transform is needed.
inline double rms_spatial_change(const SpectralGrid& a, const SpectralGrid& b) {
    double acc = 0.0;
    for (int i = 0; i < a.size(); ++i) acc += std::norm(a.v[i] - b.v[i]);
    return std::sqrt(acc) / a.size();
}

}  // namespace detail

inline RealGrid update_v(const MultiChannelGrid& x, const SpectralGrid& alpha_hat, double b,
                         const LabelGrid& y, const KernelSpec& kernel) {
    return detail::update_v_spectral(kernel_autospectrum(x, kernel), alpha_hat, b, y);
}

inline SpectralGrid update_alpha(const PartTrainingInput& part, const RealGrid& q, double b,
                                 const SpectralGrid& alpha_r, const SolverConfig& cfg,
                                 const KernelSpec& kernel) {
    return detail::update_alpha_spectral(kernel_autospectrum(part.x, kernel), q, b, alpha_r,
                                         part.alpha_prev, cfg.delta * part.omega, cfg.beta, cfg.C);
}

// Closed-form initialization: alpha_hat = y_adj / (k_hat + 1/C) with
// y_adj = sum_c conj(x_hat_c) o y_hat for the linear kernel and y_hat for the
// kernelized form; b starts at the label mean.
inline PartSolution init_part(const MultiChannelGrid& x, const LabelGrid& y,
                              const SolverConfig& cfg) {
    if (x.rows() != y.rows || x.cols() != y.cols)
        throw std::invalid_argument("init_part: feature/label shape mismatch");
    MultiSpectralGrid xs = dft2(x);
    SpectralGrid kxx = kernel_autospectrum(xs, cfg.kernel);
    SpectralGrid yh = dft2(label_real(y));
    SpectralGrid num(yh.rows, yh.cols);
    if (cfg.kernel.type == KernelType::linear) {
        for (const auto& ch : xs)
            for (int i = 0; i < num.size(); ++i) num.v[i] += std::conj(ch.v[i]) * yh.v[i];
    } else {
        num = yh;
    }
    PartSolution out;
    out.alpha_hat = SpectralGrid(yh.rows, yh.cols);
    for (int i = 0; i < num.size(); ++i) out.alpha_hat.v[i] = num.v[i] / (kxx.v[i] + 1.0 / cfg.C);
    double mean_y = 0.0;
    for (int v : y.v) mean_y += v;
    out.b = mean_y / y.size();
    out.v = RealGrid(yh.rows, yh.cols);
    out.q = RealGrid(yh.rows, yh.cols);
    return out;
}

// omega = exp(-0.5 |w_l - w_r|^2 / kappa^2), the distance taken in the
// spatial domain via Parseval on the given spectra.
inline double compute_omega(const SpectralGrid& w_l, const SpectralGrid& w_r, double kappa) {
    if (!w_l.same_shape(w_r)) throw std::invalid_argument("compute_omega: shape mismatch");
    if (kappa <= 0.0) throw std::invalid_argument("compute_omega: kappa must be positive");
    double dist2 = 0.0;
    for (int i = 0; i < w_l.size(); ++i) dist2 += std::norm(w_l.v[i] - w_r.v[i]);
    dist2 /= static_cast<double>(w_l.rows) * w_l.cols;
    return std::exp(-0.5 * dist2 / (kappa * kappa));
}

inline double compute_omega(const MultiSpectralGrid& w_l, const MultiSpectralGrid& w_r,
                            double kappa) {
    if (w_l.empty() || w_l.size() != w_r.size())
        throw std::invalid_argument("compute_omega: channel count mismatch");
    if (kappa <= 0.0) throw std::invalid_argument("compute_omega: kappa must be positive");
    double dist2 = 0.0;
    for (std::size_t c = 0; c < w_l.size(); ++c) {
        if (!w_l[c].same_shape(w_r[c])) throw std::invalid_argument("compute_omega: shape mismatch");
        double acc = 0.0;
        for (int i = 0; i < w_l[c].size(); ++i) acc += std::norm(w_l[c].v[i] - w_r[c].v[i]);
        dist2 += acc / (static_cast<double>(w_l[c].rows) * w_l[c].cols);
    }
    return std::exp(-0.5 * dist2 / (kappa * kappa));
}

inline SpectralGrid update_alpha_r(const std::vector<SpectralGrid>& alphas,
                                   const std::vector<double>& omegas) {
    if (alphas.empty()) throw std::invalid_argument("update_alpha_r: empty part list");
    if (alphas.size() != omegas.size())
        throw std::invalid_argument("update_alpha_r: weight count mismatch");
    double total = 0.0;
    for (double w : omegas) total += w;
    if (total <= 0.0) throw std::invalid_argument("update_alpha_r: weights must sum above zero");
    SpectralGrid out(alphas.front().rows, alphas.front().cols);
    for (std::size_t l = 0; l < alphas.size(); ++l) {
        if (!alphas[l].same_shape(out))
            throw std::invalid_argument("update_alpha_r: shape mismatch");
        for (int i = 0; i < out.size(); ++i) out.v[i] += omegas[l] * alphas[l].v[i];
    }
    for (auto& v : out.v) v /= total;
    return out;
}

// Runs the alternating updates over all parts until the largest RMS change of
// any part's spatial dual coefficients drops below tau or the cap is hit.
// A null warm start takes the closed-form initialization and the first-frame
// cap; a warm start resumes from the given solutions with the online cap.
// Returned v, q, and b are refreshed once from the final alpha_hat so the
// solution is self-consistent.
inline std::vector<PartSolution> solve_joint(const std::vector<PartTrainingInput>& parts,
                                             const SolverConfig& cfg,
                                             const std::vector<PartSolution>* warm = nullptr,
                                             SolveStats* stats = nullptr) {
    if (parts.empty()) throw std::invalid_argument("solve_joint: needs at least one part");
    if (cfg.C <= 0.0 || cfg.kappa <= 0.0 || cfg.tau <= 0.0 || cfg.delta < 0.0 || cfg.beta < 0.0 ||
        cfg.max_iter_first < 1 || cfg.max_iter_update < 1)
        throw std::invalid_argument("solve_joint: invalid solver configuration");
    const int L = static_cast<int>(parts.size());
    if (warm && static_cast<int>(warm->size()) != L)
        throw std::invalid_argument("solve_joint: warm start size mismatch");
    for (const auto& p : parts) {
        if (!p.x.same_shape(parts.front().x))
            throw std::invalid_argument("solve_joint: parts must share one grid shape");
        if (p.x.rows() != p.y.rows || p.x.cols() != p.y.cols)
            throw std::invalid_argument("solve_joint: feature/label shape mismatch");
        if (!(p.omega > 0.0) || p.omega > 1.0)
            throw std::invalid_argument("solve_joint: omega must lie in (0, 1]");
    }

    std::vector<SpectralGrid> kxx(L);
    std::vector<double> omegas(L);
    std::vector<SpectralGrid> alphas(L);
    std::vector<SpectralGrid> anchors(L);
    std::vector<double> bs(L);
    for (int l = 0; l < L; ++l) {
        kxx[l] = kernel_autospectrum(parts[l].x, cfg.kernel);
        omegas[l] = parts[l].omega;
        if (warm) {
            alphas[l] = (*warm)[l].alpha_hat;
            bs[l] = (*warm)[l].b;
        } else {
            PartSolution init = init_part(parts[l].x, parts[l].y, cfg);
            alphas[l] = std::move(init.alpha_hat);
            bs[l] = init.b;
        }
        // With no explicit previous-frame coefficients the temporal term
        // anchors at the iteration's own starting point, which keeps the
        // proximal pull well defined on the first frame.
        anchors[l] = parts[l].alpha_prev.size() > 0 ? parts[l].alpha_prev : alphas[l];
    }

    const int cap = warm ? cfg.max_iter_update : cfg.max_iter_first;
    int iterations = 0;
    bool converged = false;
    double change = 0.0;
    std::vector<RealGrid> qs(L);
    while (iterations < cap && !converged) {
        ++iterations;
        SpectralGrid alpha_r = update_alpha_r(alphas, omegas);
        change = 0.0;
        for (int l = 0; l < L; ++l) {
            RealGrid v = detail::update_v_spectral(kxx[l], alphas[l], bs[l], parts[l].y);
            qs[l] = update_q(parts[l].y, v);
            bs[l] = update_b(qs[l]);
            SpectralGrid next = detail::update_alpha_spectral(
                kxx[l], qs[l], bs[l], alpha_r, anchors[l],
                cfg.delta * parts[l].omega, cfg.beta, cfg.C);
            change = std::max(change, detail::rms_spatial_change(next, alphas[l]));
            alphas[l] = std::move(next);
        }
        converged = change < cfg.tau;
    }

    std::vector<PartSolution> out(L);
    for (int l = 0; l < L; ++l) {
        out[l].alpha_hat = std::move(alphas[l]);
        out[l].v = detail::update_v_spectral(kxx[l], out[l].alpha_hat, bs[l], parts[l].y);
        out[l].q = update_q(parts[l].y, out[l].v);
        out[l].b = update_b(out[l].q);
    }
    if (stats) {
        stats->iterations = iterations;
        stats->converged = converged;
        stats->final_change = change;
    }
    return out;
}

}  // namespace sskcf
