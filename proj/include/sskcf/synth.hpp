#pragma once

// Deterministic synthetic sequences for benchmarking without external data.
// A textured sprite moves over a textured background along a piecewise-linear
// center path with a piecewise-linear similarity scale; optional solid
// occluders ride along with the target. The same spec and seed always render
// bit-identical frames, and the generator records per-frame ground truth,
// occlusion flags, and the true scale factor.

#include <sskcf/sequence.hpp>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <iomanip>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace sskcf {

// Frame indices are 1-based throughout a synth spec. `target` fixes the base
// size and the default (static) center; when `path` is present its waypoints
// override the center from frame 1 on. Occluder offsets are pixels from the
// target's current top-left corner, so the occluder follows the target.
struct SynthSpec {
    int width = 320;
    int height = 240;
    int frames = 60;
    Box target;

    struct Waypoint {
        int frame = 1;
        double cx = 0.0;
        double cy = 0.0;
    };
    std::vector<Waypoint> path;

    struct ScaleKey {
        int frame = 1;
        double factor = 1.0;
    };
    std::vector<ScaleKey> scale;

    struct Occluder {
        int first = 0;
        int last = 0;
        double x = 0.0;
        double y = 0.0;
        double w = 0.0;
        double h = 0.0;
    };
    std::vector<Occluder> occluders;

    unsigned long seed = 1;
};

struct SynthResult {
    Sequence sequence;
    std::vector<bool> occluded;
    std::vector<double> true_scale;
};

namespace detail {

inline double interp_keys(const std::vector<std::pair<int, double>>& keys, int frame) {
    if (keys.front().first >= frame) return keys.front().second;
    if (keys.back().first <= frame) return keys.back().second;
    for (std::size_t i = 1; i < keys.size(); ++i) {
        if (keys[i].first < frame) continue;
        const double t = static_cast<double>(frame - keys[i - 1].first) /
                         static_cast<double>(keys[i].first - keys[i - 1].first);
        return keys[i - 1].second + t * (keys[i].second - keys[i - 1].second);
    }
    return keys.back().second;
}

inline Image blurred_noise(int w, int h, std::mt19937_64& rng) {
    Image raw(w, h, 3);
    for (std::uint8_t& p : raw.pixels) p = static_cast<std::uint8_t>(rng() & 0xff);
    Image out(w, h, 3);
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x)
            for (int c = 0; c < 3; ++c) {
                int sum = 0;
                for (int dy = -1; dy <= 1; ++dy)
                    for (int dx = -1; dx <= 1; ++dx)
                        sum += raw.at((x + dx + w) % w, (y + dy + h) % h, c);
                out.at(x, y, c) = static_cast<std::uint8_t>(sum / 9);
            }
    return out;
}

// The sprite gets stretched contrast and a warm color cast so both its
// gradient structure and its histogram separate from the background.
inline Image make_sprite(int n, std::mt19937_64& rng) {
    Image sprite = blurred_noise(n, n, rng);
    const double gain[3] = {2.4, 2.0, 1.2};
    for (int y = 0; y < n; ++y)
        for (int x = 0; x < n; ++x)
            for (int c = 0; c < 3; ++c) {
                const double v = 128.0 + gain[c] * (sprite.at(x, y, c) - 128.0);
                sprite.at(x, y, c) = static_cast<std::uint8_t>(std::clamp(v, 0.0, 255.0));
            }
    return sprite;
}

}  // namespace detail

inline SynthResult synthesize(const SynthSpec& spec) {
    if (spec.width < 8 || spec.height < 8)
        throw std::invalid_argument("synthesize: frame size too small");
    if (spec.frames < 1) throw std::invalid_argument("synthesize: need at least one frame");
    if (spec.target.w <= 0.0 || spec.target.h <= 0.0)
        throw std::invalid_argument("synthesize: target must have positive size");

    std::vector<std::pair<int, double>> cx_keys, cy_keys, s_keys;
    if (spec.path.empty()) {
        cx_keys.emplace_back(1, spec.target.x - 1.0 + spec.target.w / 2.0);
        cy_keys.emplace_back(1, spec.target.y - 1.0 + spec.target.h / 2.0);
    } else {
        for (const SynthSpec::Waypoint& wp : spec.path) {
            cx_keys.emplace_back(wp.frame, wp.cx);
            cy_keys.emplace_back(wp.frame, wp.cy);
        }
    }
    if (spec.scale.empty()) {
        s_keys.emplace_back(1, 1.0);
    } else {
        for (const SynthSpec::ScaleKey& sk : spec.scale) s_keys.emplace_back(sk.frame, sk.factor);
    }

    std::mt19937_64 rng(spec.seed);
    const Image background = detail::blurred_noise(spec.width, spec.height, rng);
    const Image sprite = detail::make_sprite(128, rng);

    SynthResult out;
    out.sequence.name = "synth";
    out.sequence.frames.reserve(spec.frames);
    for (int t = 1; t <= spec.frames; ++t) {
        const double cx = detail::interp_keys(cx_keys, t);
        const double cy = detail::interp_keys(cy_keys, t);
        const double s = detail::interp_keys(s_keys, t);
        if (s <= 0.0) throw std::invalid_argument("synthesize: scale must stay positive");
        const double w = spec.target.w * s;
        const double h = spec.target.h * s;
        const double left = cx - w / 2.0;
        const double top = cy - h / 2.0;
        if (left < 0.0 || top < 0.0 || left + w > spec.width || top + h > spec.height)
            throw std::invalid_argument("synthesize: target leaves the frame at frame " +
                                        std::to_string(t));

        Image frame = background;
        const PixelView sv = sprite.view();
        const int x0 = static_cast<int>(std::floor(left));
        const int y0 = static_cast<int>(std::floor(top));
        const int x1 = static_cast<int>(std::ceil(left + w));
        const int y1 = static_cast<int>(std::ceil(top + h));
        for (int py = std::max(0, y0); py < std::min(spec.height, y1); ++py)
            for (int px = std::max(0, x0); px < std::min(spec.width, x1); ++px) {
                const double ux = px + 0.5 - left;
                const double uy = py + 0.5 - top;
                if (ux < 0.0 || uy < 0.0 || ux >= w || uy >= h) continue;
                for (int c = 0; c < 3; ++c) {
                    const double v = sample_bilinear(sv, ux / w * sprite.width,
                                                     uy / h * sprite.height, c);
                    frame.at(px, py, c) = static_cast<std::uint8_t>(std::clamp(v, 0.0, 255.0));
                }
            }

        bool covered = false;
        for (const SynthSpec::Occluder& occ : spec.occluders) {
            if (t < occ.first || t > occ.last) continue;
            covered = true;
            const int ox0 = std::max(0, static_cast<int>(std::floor(left + occ.x)));
            const int oy0 = std::max(0, static_cast<int>(std::floor(top + occ.y)));
            const int ox1 = std::min(spec.width, static_cast<int>(std::ceil(left + occ.x + occ.w)));
            const int oy1 = std::min(spec.height, static_cast<int>(std::ceil(top + occ.y + occ.h)));
            for (int py = oy0; py < oy1; ++py)
                for (int px = ox0; px < ox1; ++px)
                    for (int c = 0; c < 3; ++c) frame.at(px, py, c) = 128;
        }

        out.sequence.frames.push_back(std::move(frame));
        out.sequence.ground_truth.push_back({left + 1.0, top + 1.0, w, h});
        out.occluded.push_back(covered);
        out.true_scale.push_back(s);
    }
    return out;
}

namespace detail {

inline std::vector<std::vector<double>> parse_records(const std::string& value,
                                                      std::size_t fields,
                                                      const std::string& label) {
    std::vector<std::vector<double>> out;
    std::istringstream records(value);
    std::string record;
    while (std::getline(records, record, ';')) {
        if (record.find_first_not_of(" \t") == std::string::npos) continue;
        std::vector<double> row;
        std::istringstream parts(record);
        std::string field;
        while (std::getline(parts, field, ':')) {
            std::size_t used = 0;
            double v = 0.0;
            try {
                v = std::stod(field, &used);
            } catch (const std::exception&) {
                throw std::runtime_error(label + ": bad number '" + field + "'");
            }
            while (used < field.size() && std::isspace(static_cast<unsigned char>(field[used])))
                ++used;
            if (used != field.size())
                throw std::runtime_error(label + ": bad number '" + field + "'");
            row.push_back(v);
        }
        if (row.size() != fields)
            throw std::runtime_error(label + ": expected " + std::to_string(fields) +
                                     " colon-separated fields");
        out.push_back(std::move(row));
    }
    return out;
}

}  // namespace detail

// Flat key = value lines; '#' starts a comment and unknown keys are rejected
// with their line number. Waypoint-style values are semicolon-separated
// records of colon-separated numbers, e.g. `path = 1:160:120; 100:40:80`.
inline SynthSpec parse_synth_spec(const std::string& text) {
    SynthSpec spec;
    bool saw_target = false;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const std::string where = "synth spec line " + std::to_string(line_no);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        const std::size_t eq = line.find('=');
        if (eq == std::string::npos) throw std::runtime_error(where + ": expected key = value");
        auto trim = [](std::string s) {
            const std::size_t b = s.find_first_not_of(" \t\r");
            const std::size_t e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));

        if (key == "width") {
            spec.width = std::stoi(value);
        } else if (key == "height") {
            spec.height = std::stoi(value);
        } else if (key == "frames") {
            spec.frames = std::stoi(value);
        } else if (key == "seed") {
            spec.seed = std::stoul(value);
        } else if (key == "target") {
            std::string commas = value;
            for (char& c : commas)
                if (c == ',') c = ':';
            const auto rows = detail::parse_records(commas, 4, where);
            if (rows.size() != 1) throw std::runtime_error(where + ": expected x,y,w,h");
            spec.target = {rows[0][0], rows[0][1], rows[0][2], rows[0][3]};
            saw_target = true;
        } else if (key == "path") {
            for (const std::vector<double>& r : detail::parse_records(value, 3, where))
                spec.path.push_back({static_cast<int>(r[0]), r[1], r[2]});
        } else if (key == "scale") {
            for (const std::vector<double>& r : detail::parse_records(value, 2, where))
                spec.scale.push_back({static_cast<int>(r[0]), r[1]});
        } else if (key == "occluder") {
            for (const std::vector<double>& r : detail::parse_records(value, 6, where))
                spec.occluders.push_back({static_cast<int>(r[0]), static_cast<int>(r[1]), r[2],
                                          r[3], r[4], r[5]});
        } else {
            throw std::runtime_error(where + ": unknown key '" + key + "'");
        }
    }
    if (!saw_target) throw std::runtime_error("synth spec: missing target = x,y,w,h");
    return spec;
}

// Writes frames as img/0001.png ... plus groundtruth_rect.txt, producing a
// directory load_sequence accepts unchanged.
inline void save_sequence(const Sequence& seq, const std::string& dir) {
    namespace fs = std::filesystem;
    if (seq.size() < 1) throw std::invalid_argument("save_sequence: empty sequence");
    fs::create_directories(fs::path(dir) / "img");
    for (int i = 0; i < seq.size(); ++i) {
        std::ostringstream name;
        name << std::setw(4) << std::setfill('0') << (i + 1) << ".png";
        const Image frame = seq.frame(i);
        save_png((fs::path(dir) / "img" / name.str()).string(), frame.view());
    }
    std::ofstream gt(fs::path(dir) / "groundtruth_rect.txt");
    if (!gt) throw std::runtime_error("save_sequence: cannot write ground truth in " + dir);
    for (const Box& b : seq.ground_truth)
        gt << b.x << ',' << b.y << ',' << b.w << ',' << b.h << '\n';
}

}  // namespace sskcf
