// Smallest useful tracking loop: synthesize a short sequence in memory,
// initialize from the first ground-truth box, and print one predicted box
// per frame alongside the truth.

#include <sskcf/synth.hpp>
#include <sskcf/tracker.hpp>

#include <cstdio>

int main() {
    sskcf::SynthSpec spec;
    spec.width = 320;
    spec.height = 240;
    spec.frames = 20;
    spec.target = {113.0, 73.0, 96.0, 96.0};
    spec.path = {{1, 160.0, 120.0}, {20, 198.0, 139.0}};
    spec.seed = 7;
    const sskcf::SynthResult synth = sskcf::synthesize(spec);

    const sskcf::Image first = synth.sequence.frame(0);
    sskcf::TrackerState state = sskcf::init_track(
        first.view(), sskcf::to_tracker(synth.sequence.ground_truth[0]), sskcf::TrackerConfig{});

    for (int i = 1; i < synth.sequence.size(); ++i) {
        const sskcf::Image frame = synth.sequence.frame(i);
        const sskcf::BoundingBox box = sskcf::step(state, frame.view());
        const sskcf::Box truth = synth.sequence.ground_truth[i];
        std::printf("frame %2d: predicted %6.1f %6.1f %5.1f %5.1f   truth %6.1f %6.1f\n", i + 1,
                    box.x + 1.0, box.y + 1.0, box.w, box.h, truth.x, truth.y);
    }
    return 0;
}
