#pragma once

// Sequence ingestion in the common benchmark layout: a directory holding an
// img/ folder of numbered PNG or JPEG frames next to groundtruth_rect.txt
// with one 1-based x,y,w,h line per frame. Frames stay on disk and decode on
// access; synthetic sequences keep their frames in memory instead.

#include <sskcf/eval.hpp>
#include <sskcf/io.hpp>

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sskcf {

struct Sequence {
    std::string name;
    std::vector<std::string> frame_paths;
    std::vector<Image> frames;
    std::vector<Box> ground_truth;

    int size() const {
        return static_cast<int>(frames.empty() ? frame_paths.size() : frames.size());
    }
    Image frame(int i) const {
        if (i < 0 || i >= size()) throw std::out_of_range("Sequence::frame: index out of range");
        return frames.empty() ? load_image(frame_paths[i]) : frames[i];
    }
};

namespace detail {

// Frames sort by the last digit run in the filename so img/9.jpg precedes
// img/10.jpg; names without digits fall back to lexicographic order.
inline long long frame_number(const std::string& stem) {
    int end = static_cast<int>(stem.size());
    while (end > 0 && !std::isdigit(static_cast<unsigned char>(stem[end - 1]))) --end;
    int begin = end;
    while (begin > 0 && std::isdigit(static_cast<unsigned char>(stem[begin - 1]))) --begin;
    if (begin == end) return -1;
    return std::stoll(stem.substr(begin, end - begin));
}

inline std::vector<Box> parse_ground_truth(std::istream& in, const std::string& label) {
    std::vector<Box> out;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        for (char& c : line)
            if (c == ',' || c == '\t' || c == '\r') c = ' ';
        if (line.find_first_not_of(' ') == std::string::npos) continue;
        std::istringstream fields(line);
        Box b;
        std::string trailing;
        if (!(fields >> b.x >> b.y >> b.w >> b.h) || (fields >> trailing))
            throw std::runtime_error(label + ":" + std::to_string(line_no) +
                                     ": expected x,y,w,h");
        if (b.w <= 0.0 || b.h <= 0.0)
            throw std::runtime_error(label + ":" + std::to_string(line_no) +
                                     ": box must have positive size");
        out.push_back(b);
    }
    return out;
}

}  // namespace detail

inline Sequence load_sequence(const std::string& dir) {
    namespace fs = std::filesystem;
    const fs::path root(dir);
    const fs::path img_dir = root / "img";
    if (!fs::is_directory(img_dir))
        throw std::runtime_error("load_sequence: missing img directory under " + dir);

    std::vector<std::pair<long long, std::string>> found;
    for (const fs::directory_entry& entry : fs::directory_iterator(img_dir)) {
        if (!entry.is_regular_file()) continue;
        std::string ext = entry.path().extension().string();
        std::transform(ext.begin(), ext.end(), ext.begin(),
                       [](unsigned char c) { return std::tolower(c); });
        if (ext != ".png" && ext != ".jpg" && ext != ".jpeg") continue;
        found.emplace_back(detail::frame_number(entry.path().stem().string()),
                           entry.path().string());
    }
    if (found.empty()) throw std::runtime_error("load_sequence: no frames under " + dir);
    std::sort(found.begin(), found.end());

    Sequence seq;
    seq.name = root.filename().string().empty() ? root.parent_path().filename().string()
                                                : root.filename().string();
    for (std::pair<long long, std::string>& f : found) seq.frame_paths.push_back(std::move(f.second));

    const fs::path gt_path = root / "groundtruth_rect.txt";
    std::ifstream gt(gt_path);
    if (!gt) throw std::runtime_error("load_sequence: missing " + gt_path.string());
    seq.ground_truth = detail::parse_ground_truth(gt, gt_path.string());

    if (seq.ground_truth.size() != seq.frame_paths.size())
        throw std::runtime_error("load_sequence: " + std::to_string(seq.frame_paths.size()) +
                                 " frames but " + std::to_string(seq.ground_truth.size()) +
                                 " ground-truth rows in " + dir);
    return seq;
}

}  // namespace sskcf
