#include <sskcf/harness.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace sskcf;
namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / ("sskcf_test_" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

Image gradient_noise(int w, int h, int channels, unsigned seed) {
    std::mt19937_64 rng(seed);
    Image img(w, h, channels);
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x)
            for (int c = 0; c < channels; ++c)
                img.at(x, y, c) = static_cast<std::uint8_t>(
                    (x * 5 + y * 3 + static_cast<int>(rng() % 64)) % 256);
    return img;
}

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream text;
    text << in.rdbuf();
    return text.str();
}

EvalRecord record_with(double overlap, double cle) {
    EvalRecord r;
    r.overlap = overlap;
    r.cle = cle;
    return r;
}

SynthSpec small_spec() {
    SynthSpec spec;
    spec.width = 160;
    spec.height = 120;
    spec.frames = 6;
    spec.target = {41.0, 31.0, 40.0, 40.0};
    spec.seed = 11;
    return spec;
}

}  // namespace

TEST_CASE("intersection over union follows the overlap geometry", "[harness]") {
    const Box a{10.0, 20.0, 30.0, 40.0};
    CHECK(iou(a, a) == 1.0);
    CHECK(iou(a, Box{100.0, 200.0, 5.0, 5.0}) == 0.0);
    CHECK(iou(Box{0.0, 0.0, 1.0, 1.0}, Box{0.5, 0.0, 1.0, 1.0}) == Catch::Approx(1.0 / 3.0));
    CHECK(iou(Box{0.0, 0.0, 4.0, 4.0}, Box{1.0, 1.0, 2.0, 2.0}) == Catch::Approx(0.25));

    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> pos(0.0, 50.0), len(1.0, 30.0);
    for (int i = 0; i < 25; ++i) {
        const Box p{pos(rng), pos(rng), len(rng), len(rng)};
        const Box q{pos(rng), pos(rng), len(rng), len(rng)};
        const double v = iou(p, q);
        CHECK(v == iou(q, p));
        CHECK(v >= 0.0);
        CHECK(v <= 1.0);
    }

    CHECK_THROWS_AS(iou(Box{0.0, 0.0, 0.0, 1.0}, a), std::invalid_argument);

    CHECK(center_error(Box{0.0, 0.0, 10.0, 10.0}, Box{3.0, 4.0, 10.0, 10.0}) ==
          Catch::Approx(5.0));
}

TEST_CASE("metric thresholds are strict and the curves are means", "[harness]") {
    SECTION("distance precision counts errors strictly below 20") {
        std::vector<EvalRecord> records = {record_with(1.0, 5.0), record_with(1.0, 25.0),
                                           record_with(1.0, 15.0), record_with(1.0, 40.0)};
        const MetricsReport m = compute_metrics(records);
        CHECK(m.dp20 == 0.5);
        CHECK(m.mean_cle == Catch::Approx(21.25));
        CHECK(m.precision.size() == 51);
        records.push_back(record_with(1.0, 20.0));
        CHECK(compute_metrics(records).dp20 == Catch::Approx(0.4));
    }

    SECTION("overlap precision counts overlaps strictly above 0.5") {
        std::vector<EvalRecord> records = {record_with(0.6, 0.0), record_with(0.4, 0.0)};
        const MetricsReport m = compute_metrics(records);
        CHECK(m.op50 == 0.5);
        CHECK(m.mean_iou == Catch::Approx(0.5));
        records.push_back(record_with(0.5, 0.0));
        CHECK(compute_metrics(records).op50 == Catch::Approx(1.0 / 3.0));
    }

    SECTION("a perfect run saturates every threshold it can") {
        const std::vector<EvalRecord> records(3, record_with(1.0, 0.0));
        const MetricsReport m = compute_metrics(records);
        CHECK(m.dp20 == 1.0);
        CHECK(m.precision[0] == 0.0);
        CHECK(m.success.size() == 21);
        for (int t = 0; t < 20; ++t) CHECK(m.success[t] == 1.0);
        CHECK(m.success[20] == 0.0);
        CHECK(m.auc == Catch::Approx(20.0 / 21.0));
    }

    SECTION("curves are monotone in their thresholds") {
        std::mt19937_64 rng(9);
        std::uniform_real_distribution<double> ov(0.0, 1.0), err(0.0, 60.0);
        std::vector<EvalRecord> records;
        for (int i = 0; i < 40; ++i) records.push_back(record_with(ov(rng), err(rng)));
        const MetricsReport m = compute_metrics(records);
        for (std::size_t t = 1; t < m.precision.size(); ++t)
            CHECK(m.precision[t] >= m.precision[t - 1]);
        for (std::size_t t = 1; t < m.success.size(); ++t)
            CHECK(m.success[t] <= m.success[t - 1]);
    }

    CHECK_THROWS_AS(compute_metrics({}), std::invalid_argument);
}

TEST_CASE("box conversions shift between 1-based and 0-based corners", "[harness]") {
    const Box file{10.0, 20.0, 30.0, 40.0};
    const BoundingBox tb = to_tracker(file);
    CHECK(tb.x == 9.0);
    CHECK(tb.y == 19.0);
    CHECK(tb.w == 30.0);
    const Box back = from_tracker(tb);
    CHECK(back.x == 10.0);
    CHECK(back.y == 20.0);
}

TEST_CASE("png and jpeg frames survive a disk round trip", "[harness]") {
    const fs::path dir = fresh_dir("codec");

    SECTION("png is lossless for color and gray") {
        const Image color = gradient_noise(33, 21, 3, 1);
        const std::string path = (dir / "color.png").string();
        save_png(path, color.view());
        const Image got = load_image(path);
        REQUIRE(got.width == 33);
        REQUIRE(got.height == 21);
        REQUIRE(got.channels == 3);
        CHECK(got.pixels == color.pixels);

        const Image gray = gradient_noise(16, 12, 1, 2);
        const std::string gpath = (dir / "gray.png").string();
        save_png(gpath, gray.view());
        const Image ggot = load_image(gpath);
        REQUIRE(ggot.channels == 1);
        CHECK(ggot.pixels == gray.pixels);
    }

    SECTION("jpeg stays close to the source") {
        Image color(40, 24, 3);
        for (int y = 0; y < color.height; ++y)
            for (int x = 0; x < color.width; ++x)
                for (int c = 0; c < 3; ++c)
                    color.at(x, y, c) = static_cast<std::uint8_t>(
                        128.0 + 90.0 * std::sin(0.25 * x + c) * std::cos(0.2 * y));
        const std::string path = (dir / "photo.jpg").string();
        save_jpeg(path, color.view());
        const Image got = load_image(path);
        REQUIRE(got.width == 40);
        REQUIRE(got.height == 24);
        REQUIRE(got.channels == 3);
        double err = 0.0;
        for (std::size_t i = 0; i < got.pixels.size(); ++i)
            err += std::abs(static_cast<double>(got.pixels[i]) - color.pixels[i]);
        CHECK(err / got.pixels.size() < 8.0);
    }

    SECTION("unreadable inputs are rejected") {
        const std::string junk = (dir / "junk.png").string();
        std::ofstream(junk) << "this is not an image";
        CHECK_THROWS_WITH(load_image(junk), Catch::Matchers::ContainsSubstring("unrecognized"));
        CHECK_THROWS_AS(load_image((dir / "absent.png").string()), std::runtime_error);
        const std::string lying = (dir / "lying.jpg").string();
        std::ofstream(lying, std::ios::binary) << "\xff\xd8garbage";
        CHECK_THROWS_AS(load_image(lying), std::runtime_error);
    }
}

TEST_CASE("sequences load frames and ground truth from the benchmark layout", "[harness]") {
    const fs::path dir = fresh_dir("sequence");
    fs::create_directories(dir / "img");
    save_png((dir / "img" / "1.png").string(), gradient_noise(40, 30, 3, 1).view());
    save_png((dir / "img" / "2.png").string(), gradient_noise(40, 30, 3, 2).view());
    save_png((dir / "img" / "10.png").string(), gradient_noise(40, 30, 3, 3).view());

    SECTION("frames sort numerically and rows parse with mixed separators") {
        std::ofstream(dir / "groundtruth_rect.txt") << "1,2,10,11\n3\t4\t10\t11\n5, 6, 10, 11\n";
        const Sequence seq = load_sequence(dir.string());
        REQUIRE(seq.size() == 3);
        CHECK(seq.frame_paths[0].find("1.png") != std::string::npos);
        CHECK(seq.frame_paths[1].find("2.png") != std::string::npos);
        CHECK(seq.frame_paths[2].find("10.png") != std::string::npos);
        REQUIRE(seq.ground_truth.size() == 3);
        CHECK(seq.ground_truth[1].x == 3.0);
        CHECK(seq.ground_truth[2].y == 6.0);
        CHECK(seq.frame(0).width == 40);
        CHECK(seq.name == dir.filename().string());
    }

    SECTION("a malformed row is reported with its line number") {
        std::ofstream(dir / "groundtruth_rect.txt") << "1,2,10,11\n3,oops,10,11\n5,6,10,11\n";
        CHECK_THROWS_WITH(load_sequence(dir.string()), Catch::Matchers::ContainsSubstring(":2:"));
        std::ofstream(dir / "groundtruth_rect.txt") << "1,2,10,11\n3,4,10,11\n5,6,10,11,99\n";
        CHECK_THROWS_WITH(load_sequence(dir.string()), Catch::Matchers::ContainsSubstring(":3:"));
    }

    SECTION("degenerate boxes are rejected with their line number") {
        std::ofstream(dir / "groundtruth_rect.txt") << "1,2,10,11\n3,4,0,11\n5,6,10,11\n";
        CHECK_THROWS_WITH(load_sequence(dir.string()),
                          Catch::Matchers::ContainsSubstring(":2:") &&
                              Catch::Matchers::ContainsSubstring("positive"));
    }

    SECTION("frame and row counts must agree") {
        std::ofstream(dir / "groundtruth_rect.txt") << "1,2,10,11\n3,4,10,11\n";
        CHECK_THROWS_WITH(load_sequence(dir.string()),
                          Catch::Matchers::ContainsSubstring("3 frames") &&
                              Catch::Matchers::ContainsSubstring("2 ground-truth"));
    }

    SECTION("missing pieces are named") {
        fs::remove(dir / "groundtruth_rect.txt");
        CHECK_THROWS_WITH(load_sequence(dir.string()),
                          Catch::Matchers::ContainsSubstring("groundtruth_rect.txt"));
        const fs::path empty = fresh_dir("sequence_empty");
        CHECK_THROWS_WITH(load_sequence(empty.string()),
                          Catch::Matchers::ContainsSubstring("img"));
    }
}

TEST_CASE("synthetic rendering is deterministic and honors its schedule", "[harness]") {
    SECTION("the same spec and seed render bit-identical sequences") {
        const SynthSpec spec = small_spec();
        const SynthResult a = synthesize(spec);
        const SynthResult b = synthesize(spec);
        REQUIRE(a.sequence.size() == spec.frames);
        for (int i = 0; i < spec.frames; ++i)
            CHECK(a.sequence.frames[i].pixels == b.sequence.frames[i].pixels);

        SynthSpec reseeded = spec;
        reseeded.seed = 12;
        const SynthResult c = synthesize(reseeded);
        CHECK(a.sequence.frames[0].pixels != c.sequence.frames[0].pixels);
    }

    SECTION("ground truth follows the path and scale keys") {
        SynthSpec spec = small_spec();
        spec.path = {{1, 61.0, 51.0}, {6, 81.0, 51.0}};
        spec.scale = {{1, 1.0}, {6, 1.5}};
        const SynthResult r = synthesize(spec);
        CHECK(r.sequence.ground_truth[0].x == Catch::Approx(61.0 - 20.0 + 1.0));
        CHECK(r.sequence.ground_truth[5].w == Catch::Approx(60.0));
        CHECK(r.true_scale[0] == 1.0);
        CHECK(r.true_scale[5] == Catch::Approx(1.5));
        const double mid = r.sequence.ground_truth[2].x + r.sequence.ground_truth[2].w / 2.0 - 1.0;
        CHECK(mid == Catch::Approx(69.0));
    }

    SECTION("occluders paint solid gray over the target and are flagged") {
        SynthSpec spec = small_spec();
        spec.occluders = {{3, 4, 5.0, 5.0, 12.0, 12.0}};
        const SynthResult r = synthesize(spec);
        CHECK_FALSE(r.occluded[1]);
        CHECK(r.occluded[2]);
        CHECK(r.occluded[3]);
        CHECK_FALSE(r.occluded[4]);
        const Image& covered = r.sequence.frames[2];
        CHECK(covered.at(50, 40, 0) == 128);
        CHECK(covered.at(50, 40, 1) == 128);
        const Image& clear = r.sequence.frames[1];
        CHECK(clear.pixels != covered.pixels);
    }

    SECTION("degenerate specs are rejected") {
        SynthSpec leaving = small_spec();
        leaving.path = {{1, 80.0, 60.0}, {6, 150.0, 60.0}};
        CHECK_THROWS_WITH(synthesize(leaving),
                          Catch::Matchers::ContainsSubstring("leaves the frame"));
        SynthSpec flat = small_spec();
        flat.target.w = 0.0;
        CHECK_THROWS_AS(synthesize(flat), std::invalid_argument);
        SynthSpec none = small_spec();
        none.frames = 0;
        CHECK_THROWS_AS(synthesize(none), std::invalid_argument);
    }
}

TEST_CASE("synth specs parse from flat text", "[harness]") {
    const std::string text =
        "# zoom run\n"
        "width = 320\n"
        "height = 240\n"
        "frames = 60\n"
        "target = 113, 73, 96, 96\n"
        "path = 1:160:120; 60:180:120\n"
        "scale = 1:1.0; 60:1.5\n"
        "occluder = 30:50:-4:-4:56:56\n"
        "seed = 9\n";
    const SynthSpec spec = parse_synth_spec(text);
    CHECK(spec.width == 320);
    CHECK(spec.frames == 60);
    CHECK(spec.target.x == 113.0);
    CHECK(spec.target.h == 96.0);
    REQUIRE(spec.path.size() == 2);
    CHECK(spec.path[1].frame == 60);
    CHECK(spec.path[1].cx == 180.0);
    REQUIRE(spec.scale.size() == 2);
    CHECK(spec.scale[1].factor == 1.5);
    REQUIRE(spec.occluders.size() == 1);
    CHECK(spec.occluders[0].first == 30);
    CHECK(spec.occluders[0].w == 56.0);
    CHECK(spec.seed == 9);

    CHECK_THROWS_WITH(parse_synth_spec("target = 1,1,8,8\nspeed = 3\n"),
                      Catch::Matchers::ContainsSubstring("line 2") &&
                          Catch::Matchers::ContainsSubstring("speed"));
    CHECK_THROWS_WITH(parse_synth_spec("width = 320\n"),
                      Catch::Matchers::ContainsSubstring("target"));
    CHECK_THROWS_WITH(parse_synth_spec("target = 1,1,8,8\npath = 2:x:3\n"),
                      Catch::Matchers::ContainsSubstring("line 2"));
    CHECK_THROWS_WITH(parse_synth_spec("target = 1,1,8,8\npath = 2:3\n"),
                      Catch::Matchers::ContainsSubstring("3 colon-separated"));
}

TEST_CASE("config files override defaults and reject unknown keys", "[harness]") {
    const TrackerConfig defaults;
    const TrackerConfig cfg = parse_config(
        "# overrides\n"
        "padding = 2.0\n"
        "beta = 0\n"
        "kernel = linear\n"
        "max_iter_update = 7\n"
        "orientations = 6\n");
    CHECK(cfg.padding == 2.0);
    CHECK(cfg.solver.beta == 0.0);
    CHECK(cfg.solver.kernel.type == KernelType::linear);
    CHECK(cfg.solver.max_iter_update == 7);
    CHECK(cfg.hog.orientations == 6);
    CHECK(cfg.hog.channels == 22);
    CHECK(cfg.learning_rate == defaults.learning_rate);
    CHECK(cfg.solver.C == defaults.solver.C);

    const TrackerConfig untouched = parse_config("");
    CHECK(untouched.padding == defaults.padding);
    CHECK(untouched.solver.delta == defaults.solver.delta);

    CHECK_THROWS_WITH(parse_config("paddin = 2.0\n"),
                      Catch::Matchers::ContainsSubstring("line 1") &&
                          Catch::Matchers::ContainsSubstring("paddin"));
    CHECK_THROWS_WITH(parse_config("padding = 1.8\nbeta = five\n"),
                      Catch::Matchers::ContainsSubstring("line 2"));
    CHECK_THROWS_AS(parse_config("max_iter_update = 2.5\n"), std::runtime_error);
    CHECK_THROWS_AS(parse_config("kernel = cubic\n"), std::runtime_error);
    CHECK_THROWS_AS(parse_config("padding\n"), std::runtime_error);
}

TEST_CASE("reports carry the configuration and per-frame table", "[harness]") {
    SynthSpec spec = small_spec();
    spec.frames = 3;
    RunSummary run = track_sequence(synthesize(spec).sequence, TrackerConfig{});
    run.sequence = "synth";
    run.seed = spec.seed;

    std::ostringstream report;
    write_report(report, run);
    const std::string text = report.str();
    CHECK(text.find("padding = 1.8\n") != std::string::npos);
    CHECK(text.find("delta = 0.05\n") != std::string::npos);
    CHECK(text.find("beta = 5\n") != std::string::npos);
    CHECK(text.find("kappa = 3\n") != std::string::npos);
    CHECK(text.find("C = 10000\n") != std::string::npos);
    CHECK(text.find("learning_rate = 0.015\n") != std::string::npos);
    CHECK(text.find("fusion_mix = 0.4\n") != std::string::npos);
    CHECK(text.find("psr_threshold = 5.5\n") != std::string::npos);
    CHECK(text.find("sim_threshold = 0.2\n") != std::string::npos);
    CHECK(text.find("kernel = gaussian\n") != std::string::npos);
    CHECK(text.find("sigma = 0.5\n") != std::string::npos);
    CHECK(text.find("scale_smoothing = 0.6\n") != std::string::npos);
    CHECK(text.find("dp20 = ") != std::string::npos);
    CHECK(text.find("auc = ") != std::string::npos);

    std::istringstream lines(text);
    std::string line;
    int frame_rows = 0;
    std::size_t precision_commas = 0, success_commas = 0;
    while (std::getline(lines, line)) {
        if (line.rfind("precision = ", 0) == 0)
            precision_commas = std::count(line.begin(), line.end(), ',');
        if (line.rfind("success = ", 0) == 0)
            success_commas = std::count(line.begin(), line.end(), ',');
        if (!line.empty() && line[0] >= '0' && line[0] <= '9') ++frame_rows;
    }
    CHECK(precision_commas == 50);
    CHECK(success_commas == 20);
    CHECK(frame_rows == run.predicted);

    RunSummary ablated = run;
    ablated.ablation = "owsc";
    ablated.cfg.solver.delta = 0.0;
    std::ostringstream ablated_report;
    write_report(ablated_report, ablated);
    CHECK(ablated_report.str().find("ablation = owsc\n") != std::string::npos);
    CHECK(ablated_report.str().find("delta = 0\n") != std::string::npos);

    std::ostringstream boxes;
    write_boxes(boxes, run.boxes);
    std::istringstream box_lines(boxes.str());
    int rows = 0;
    while (std::getline(box_lines, line)) {
        CHECK(std::count(line.begin(), line.end(), ',') == 3);
        ++rows;
    }
    CHECK(rows == run.predicted);
}

TEST_CASE("the command line runs end to end and stays deterministic", "[harness]") {
    const fs::path dir = fresh_dir("cli");
    const fs::path spec_path = dir / "drift.synth";
    std::ofstream(spec_path) << "width = 160\nheight = 120\nframes = 5\n"
                             << "target = 41, 31, 40, 40\n"
                             << "path = 1:60:50; 5:64:52\n"
                             << "seed = 11\n";

    auto invoke = [](std::vector<std::string> args) {
        args.insert(args.begin(), "sskcf_track");
        std::vector<char*> argv;
        for (std::string& a : args) argv.push_back(a.data());
        return run(static_cast<int>(argv.size()), argv.data());
    };

    SECTION("tracking writes boxes and a report") {
        const fs::path boxes_a = dir / "a.boxes", boxes_b = dir / "b.boxes";
        const fs::path report_path = dir / "run.report";
        REQUIRE(invoke({"--synth", spec_path.string(), "--boxes", boxes_a.string(), "--report",
                        report_path.string()}) == 0);
        REQUIRE(invoke({"--synth", spec_path.string(), "--boxes", boxes_b.string()}) == 0);

        const std::string a = read_file(boxes_a);
        CHECK(a == read_file(boxes_b));
        CHECK(std::count(a.begin(), a.end(), '\n') == 4);

        const std::string report = read_file(report_path);
        CHECK(report.find("frames = 5\n") != std::string::npos);
        CHECK(report.find("predicted = 4\n") != std::string::npos);
        CHECK(report.find("seed = 11\n") != std::string::npos);
        CHECK(report.find("ablation = none\n") != std::string::npos);
    }

    SECTION("ablations change the effective solver parameters") {
        const fs::path report_path = dir / "owsc.report";
        REQUIRE(invoke({"--synth", spec_path.string(), "--ablation", "owsc", "--report",
                        report_path.string()}) == 0);
        const std::string report = read_file(report_path);
        CHECK(report.find("ablation = owsc\n") != std::string::npos);
        CHECK(report.find("delta = 0\n") != std::string::npos);
        CHECK(report.find("beta = 5\n") != std::string::npos);
    }

    SECTION("a config file reaches the tracker") {
        const fs::path cfg_path = dir / "run.cfg";
        std::ofstream(cfg_path) << "learning_rate = 0.05\n";
        const fs::path report_path = dir / "cfg.report";
        REQUIRE(invoke({"--synth", spec_path.string(), "--config", cfg_path.string(), "--report",
                        report_path.string()}) == 0);
        CHECK(read_file(report_path).find("learning_rate = 0.05\n") != std::string::npos);

        std::ofstream(cfg_path) << "learning_rte = 0.05\n";
        CHECK(invoke({"--synth", spec_path.string(), "--config", cfg_path.string()}) != 0);
    }

    SECTION("bad invocations exit nonzero") {
        CHECK(invoke({}) != 0);
        CHECK(invoke({(dir / "missing").string()}) != 0);
        CHECK(invoke({(dir / "missing").string(), "--synth", spec_path.string()}) != 0);
        CHECK(invoke({"--synth", (dir / "absent.synth").string()}) != 0);
        CHECK(invoke({"--synth", spec_path.string(), "--ablation", "bogus"}) != 0);
        CHECK(invoke({"--synth", spec_path.string(), "--frobnicate"}) != 0);
    }

    SECTION("the seed flag overrides the spec") {
        const fs::path boxes_a = dir / "s1.boxes", boxes_b = dir / "s2.boxes";
        const fs::path report_path = dir / "seed.report";
        REQUIRE(invoke({"--synth", spec_path.string(), "--seed", "21", "--boxes",
                        boxes_a.string(), "--report", report_path.string()}) == 0);
        REQUIRE(invoke({"--synth", spec_path.string(), "--seed", "21", "--boxes",
                        boxes_b.string()}) == 0);
        CHECK(read_file(boxes_a) == read_file(boxes_b));
        CHECK(read_file(report_path).find("seed = 21\n") != std::string::npos);
    }
}

TEST_CASE("track_sequence evaluates every frame after the first", "[harness]") {
    SynthSpec spec = small_spec();
    spec.frames = 4;
    const SynthResult synth = synthesize(spec);
    const RunSummary run = track_sequence(synth.sequence, TrackerConfig{});
    CHECK(run.frames == 4);
    CHECK(run.predicted == 3);
    CHECK(run.boxes.size() == 3);
    REQUIRE(run.records.size() == 3);
    CHECK(run.records[0].frame == 2);
    CHECK(run.records[2].frame == 4);
    CHECK(run.evaluated);
    CHECK(run.fps > 0.0);
    for (const EvalRecord& r : run.records) CHECK(r.overlap > 0.5);

    Sequence two;
    two.frames = {synth.sequence.frames[0]};
    two.ground_truth = {synth.sequence.ground_truth[0]};
    CHECK_THROWS_AS(track_sequence(two, TrackerConfig{}), std::runtime_error);
}
