#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>
#include <random>
#include <string>

#include <json.hpp>

#include "quadlabel/imageio.hpp"
#include "quadlabel/oracle.hpp"
#include "quadlabel/patterns.hpp"
#include "quadlabel/pipeline.hpp"

namespace {

using namespace quadlabel;

void print_stats_text(std::ostream& os, const FrameResult& res, const RealtimeVerdict& v) {
    const FrameStats& s = res.stats;
    os << "status=" << to_string(res.status) << "\n"
       << "active_cycles=" << s.active_cycles << "\n"
       << "pause_cycles=" << s.pause_cycles << "\n"
       << "drain_cycles=" << s.drain_cycles << "\n"
       << "total_cycles=" << s.total() << "\n"
       << "interframe_cycles=" << s.interframe_cycles << "\n"
       << "chain_pushes=" << s.chain_pushes << "\n"
       << "consumed_groups=" << s.consumed_groups << "\n"
       << "peak_label=" << s.peak_label << "\n"
       << "groups_0_conflicts=" << s.conflict_histogram[0] << "\n"
       << "groups_1_conflict=" << s.conflict_histogram[1] << "\n"
       << "groups_2_conflicts=" << s.conflict_histogram[2] << "\n"
       << "cycle_budget=" << v.cycle_budget << "\n"
       << "slack=" << v.slack << "\n"
       << "verdict=" << (res.ok() ? (v.pass ? "pass" : "fail") : "invalid") << "\n";
}

void print_stats_json(std::ostream& os, const FrameResult& res, const RealtimeVerdict& v) {
    nlohmann::json j;
    const FrameStats& s = res.stats;
    j["status"] = to_string(res.status);
    j["active_cycles"] = s.active_cycles;
    j["pause_cycles"] = s.pause_cycles;
    j["drain_cycles"] = s.drain_cycles;
    j["total_cycles"] = s.total();
    j["interframe_cycles"] = s.interframe_cycles;
    j["chain_pushes"] = s.chain_pushes;
    j["consumed_groups"] = s.consumed_groups;
    j["peak_label"] = s.peak_label;
    j["groups_0_conflicts"] = s.conflict_histogram[0];
    j["groups_1_conflict"] = s.conflict_histogram[1];
    j["groups_2_conflicts"] = s.conflict_histogram[2];
    j["cycle_budget"] = v.cycle_budget;
    j["slack"] = v.slack;
    j["verdict"] = res.ok() ? (v.pass ? "pass" : "fail") : "invalid";
    os << j.dump(2) << "\n";
}

std::uint64_t effective_seed(std::uint64_t cli_seed) {
    if (const char* env = std::getenv("QUADLABEL_SEED")) return std::strtoull(env, nullptr, 10);
    return cli_seed;
}

BinaryImage bernoulli_frame(int w, int h, double density, std::uint32_t seed) {
    BinaryImage img = BinaryImage::zeros(w, h);
    std::mt19937 rng(seed);
    const auto threshold = static_cast<std::uint64_t>(density * 4294967296.0);
    for (auto& px : img.data) px = static_cast<std::uint8_t>(rng() < threshold);
    return img;
}

int cmd_label(const std::string& input, const std::string& output, int bits,
              const std::string& table_path, bool stats, bool json) {
    BinaryImage img = read_pbm(input);
    EngineConfig cfg;
    cfg.width = img.width;
    cfg.height = img.height;
    cfg.label_bits = bits;
    Engine engine(cfg);
    FrameResult res = engine.process_frame(img);
    if (!output.empty()) write_pgm16(output, res.final);
    if (!table_path.empty()) write_table_dump(table_path, res.final_table);
    if (stats || json) {
        const RealtimeVerdict v = realtime_check(res.stats, cfg);
        if (json)
            print_stats_json(std::cout, res, v);
        else
            print_stats_text(std::cout, res, v);
    }
    if (!res.ok()) {
        std::cerr << "frame invalid: " << to_string(res.status) << "\n";
        return 1;
    }
    return 0;
}

int cmd_compare(const std::string& input, int bits) {
    BinaryImage img = read_pbm(input);
    EngineConfig cfg;
    cfg.width = img.width;
    cfg.height = img.height;
    cfg.label_bits = bits;
    Engine engine(cfg);
    FrameResult res = engine.process_frame(img);
    if (!res.ok()) {
        std::cerr << "frame invalid: " << to_string(res.status) << "\n";
        return 1;
    }
    const bool same = equivalent_up_to_relabeling(res.final, label_reference(img));
    std::cout << (same ? "equivalent" : "MISMATCH") << "\n";
    return same ? 0 : 1;
}

int cmd_fuzz(int frames, int max_w, int max_h, std::uint64_t seed, int bits) {
    std::mt19937 rng(static_cast<std::uint32_t>(seed));
    int skipped = 0;
    for (int i = 0; i < frames; ++i) {
        const int w = 4 * (4 + static_cast<int>(rng() % static_cast<std::uint32_t>(std::max(1, max_w / 4 - 3))));
        const int h = 16 + static_cast<int>(rng() % static_cast<std::uint32_t>(std::max(1, max_h - 15)));
        const double density = 0.05 + 0.9 * (rng() % 1000) / 999.0;
        const std::uint32_t frame_seed = rng();
        BinaryImage img = bernoulli_frame(w, h, density, frame_seed);

        EngineConfig cfg;
        cfg.width = w;
        cfg.height = h;
        cfg.label_bits = bits;
        Engine engine(cfg);
        FrameResult res = engine.process_frame(img);
        if (res.status == FrameStatus::label_exhausted) {
            ++skipped;  // under-provisioned label budget, not a correctness failure
            continue;
        }
        bool bad = !res.ok();
        if (!bad) bad = !equivalent_up_to_relabeling(res.final, label_reference(img));
        if (!bad) bad = !res.final_table.idempotent() || !res.final_table.downward_pointing();
        if (bad) {
            const std::string repro = "fuzz_failure.pbm";
            write_pbm(repro, img);
            std::cerr << "frame " << i << " failed (" << w << "x" << h << ", density " << density
                      << ", seed " << frame_seed << ", status " << to_string(res.status)
                      << "); reproducer written to " << repro << "\n";
            return 1;
        }
    }
    std::cout << "fuzz: " << frames - skipped << "/" << frames << " frames checked, " << skipped
              << " skipped for label budget, all equivalent\n";
    return 0;
}

int cmd_bench(int width, int height, const std::string& pattern, std::uint64_t clock_hz, int fps,
              int bits, double density, std::uint64_t seed, int count, bool json) {
    auto kind = parse_pattern_kind(pattern);
    if (!kind) {
        std::cerr << "unknown pattern: " << pattern << "\n";
        return 2;
    }
    PatternParams p;
    p.width = width;
    p.height = height;
    p.density = density;
    p.seed = effective_seed(seed);
    p.count = count ? count : 1023;
    BinaryImage img = gen_pattern(*kind, p);

    EngineConfig cfg;
    cfg.width = width;
    cfg.height = height;
    cfg.label_bits = bits;
    cfg.clock_hz = clock_hz;
    cfg.fps = fps;
    Engine engine(cfg);
    FrameResult res = engine.process_frame(img);
    const RealtimeVerdict v = realtime_check(res.stats, cfg);
    if (json)
        print_stats_json(std::cout, res, v);
    else
        print_stats_text(std::cout, res, v);
    return 0;
}

int cmd_gen(const std::string& pattern, const std::string& output, int width, int height, int n,
            double density, std::uint64_t seed, int count) {
    auto kind = parse_pattern_kind(pattern);
    if (!kind) {
        std::cerr << "unknown pattern: " << pattern << "\n";
        return 2;
    }
    PatternParams p;
    p.width = width;
    p.height = height;
    p.n = n;
    p.density = density;
    p.seed = effective_seed(seed);
    p.count = count;
    write_pbm(output, gen_pattern(*kind, p));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Streaming 4-pixel-per-clock connected component labelling model"};
    app.require_subcommand(1);

    std::string input, output, table_path, pattern;
    int bits = 10;
    bool stats = false, json = false;

    auto* label = app.add_subcommand("label", "label a PBM image, write 16-bit PGM labels");
    label->add_option("input", input, "input PBM")->required();
    label->add_option("-o,--output", output, "output PGM path");
    label->add_option("--bits", bits, "label bit width")->check(CLI::Range(1, 16));
    label->add_option("--dump-table", table_path, "write the final equivalence table");
    label->add_flag("--stats", stats, "print frame statistics");
    label->add_flag("--json", json, "statistics as JSON");

    auto* compare = app.add_subcommand("compare", "run the engine and the reference labeller, compare");
    compare->add_option("input", input, "input PBM")->required();
    compare->add_option("--bits", bits, "label bit width")->check(CLI::Range(1, 16));

    int frames = 100, max_w = 256, max_h = 256;
    std::uint64_t seed = 1;
    auto* fuzz = app.add_subcommand("fuzz", "random frames against the reference labeller");
    fuzz->add_option("--frames", frames, "number of frames");
    fuzz->add_option("--max-size", [&max_w, &max_h](const CLI::results_t& r) {
        max_w = std::stoi(r.at(0));
        max_h = std::stoi(r.at(1));
        return true;
    }, "maximum width and height")->expected(2);
    fuzz->add_option("--seed", seed, "seed for the frame generator");
    fuzz->add_option("--bits", bits, "label bit width")->check(CLI::Range(1, 16));

    int width = 3840, height = 2160, n = 4, count = 0;
    std::uint64_t clock_hz = 133'300'000;
    int fps = 60;
    double density = 0.5;
    auto* bench = app.add_subcommand("bench", "run a generator pattern and report the cycle budget");
    bench->add_option("--width", width, "frame width");
    bench->add_option("--height", height, "frame height");
    bench->add_option("--pattern", pattern, "generator pattern")->required();
    bench->add_option("--clock", clock_hz, "pipeline clock in Hz");
    bench->add_option("--fps", fps, "target frame rate");
    bench->add_option("--bits", bits, "label bit width")->check(CLI::Range(1, 16));
    bench->add_option("--density", density, "density for the random pattern");
    bench->add_option("--seed", seed, "seed for the random pattern");
    bench->add_option("--count", count, "component count for max_labels");
    bench->add_flag("--json", json, "statistics as JSON");

    auto* gen = app.add_subcommand("gen", "write a generator pattern as PBM");
    gen->add_option("--pattern", pattern, "generator pattern")->required();
    gen->add_option("-o,--output", output, "output PBM path")->required();
    gen->add_option("--width", width, "frame width")->default_val(0);
    gen->add_option("--height", height, "frame height")->default_val(0);
    gen->add_option("-n", n, "chain length for ascending_chain");
    gen->add_option("--density", density, "density for the random pattern");
    gen->add_option("--seed", seed, "seed for the random pattern");
    gen->add_option("--count", count, "component count for max_labels");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (label->parsed()) return cmd_label(input, output, bits, table_path, stats, json);
        if (compare->parsed()) return cmd_compare(input, bits);
        if (fuzz->parsed()) return cmd_fuzz(frames, max_w, max_h, effective_seed(seed), bits);
        if (bench->parsed()) return cmd_bench(width, height, pattern, clock_hz, fps, bits, density, seed, count, json);
        if (gen->parsed()) return cmd_gen(pattern, output, width, height, n, density, seed, count);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
