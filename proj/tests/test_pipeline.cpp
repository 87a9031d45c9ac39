#include <doctest.h>

#include <random>
#include <vector>

#include "quadlabel/oracle.hpp"
#include "quadlabel/patterns.hpp"
#include "quadlabel/pipeline.hpp"
#include "quadlabel/recode.hpp"
#include "test_helpers.hpp"

using namespace quadlabel;
using quadlabel::testing::image_from_rows;
using quadlabel::testing::random_image;

namespace {

EngineConfig cfg_for(const BinaryImage& img, int bits = 10) {
    EngineConfig cfg;
    cfg.width = img.width;
    cfg.height = img.height;
    cfg.label_bits = bits;
    return cfg;
}

FrameResult run_frame(const BinaryImage& img, int bits = 10) {
    Engine engine(cfg_for(img, bits));
    return engine.process_frame(img);
}

}  // namespace

TEST_CASE("all-background frame") {
    BinaryImage img = BinaryImage::zeros(16, 4);
    FrameResult res = run_frame(img);
    REQUIRE(res.ok());
    for (Label l : res.final.data) CHECK(l == 0);
    CHECK(res.final_table.idempotent());
    CHECK(res.stats.pause_cycles == 0);
    CHECK(res.stats.active_cycles == 16);
    CHECK(res.stats.drain_cycles == 4 * 2);  // per-line overhead only
    CHECK(res.stats.peak_label == 0);
    CHECK(res.stats.interframe_cycles == 2 * 1024);
}

TEST_CASE("two-conflict group: provisional labels, final labels and one pause") {
    BinaryImage img = gen_pattern(PatternKind::double_merger);
    FrameResult res = run_frame(img);
    REQUIRE(res.ok());

    // The provisional image keeps the as-assigned run (1,1,4,4).
    CHECK(res.provisional.at(3, 16) == 1);
    CHECK(res.provisional.at(3, 17) == 1);
    CHECK(res.provisional.at(3, 18) == 4);
    CHECK(res.provisional.at(3, 19) == 4);

    CHECK(res.final_table.at(4) == 1);
    CHECK(res.final_table.at(7) == 1);
    for (int c = 16; c <= 19; ++c) CHECK(res.final.at(3, c) == 1);

    CHECK(res.stats.pause_cycles == 1);
    CHECK(res.stats.conflict_histogram[2] == 1);
    CHECK(equivalent_up_to_relabeling(res.final, label_reference(img)));
}

TEST_CASE("group_chain: both mergers chained, direct entry for the top label") {
    BinaryImage img = gen_pattern(PatternKind::group_chain);
    FrameResult res = run_frame(img);
    REQUIRE(res.ok());
    CHECK(res.stats.pause_cycles == 1);
    CHECK(res.stats.chain_pushes == 2);
    CHECK(res.final_table.at(5) == 2);
    CHECK(res.final_table.at(3) == 2);
    CHECK(equivalent_up_to_relabeling(res.final, label_reference(img)));
}

TEST_CASE("ascending_chain folds every component onto the lowest label") {
    BinaryImage img = gen_pattern(PatternKind::ascending_chain, {.n = 4});
    FrameResult res = run_frame(img);
    REQUIRE(res.ok());
    CHECK(res.stats.peak_label == 9);
    for (Label x : {Label(4), Label(5), Label(7), Label(9)}) CHECK(res.final_table.at(x) == 2);
    CHECK(equivalent_up_to_relabeling(res.final, label_reference(img)));
}

TEST_CASE("final equals provisional recoded through the final table") {
    for (std::uint32_t seed = 1; seed <= 10; ++seed) {
        BinaryImage img = random_image(32, 16, 0.5, seed);
        FrameResult res = run_frame(img, 12);
        REQUIRE(res.ok());
        CHECK(res.final == second_pass(res.provisional, res.final_table));
    }
}

TEST_CASE("second_pass examples") {
    EquivalenceTable id(10);
    LabelImage img{4, 1, {1, 1, 4, 4}};
    CHECK(second_pass(img, id) == img);

    EquivalenceTable t(10);
    t.record({4, 1});
    CHECK(second_pass(img, t).data == std::vector<Label>{1, 1, 1, 1});
}

TEST_CASE("determinism: identical frames give identical results") {
    BinaryImage img = random_image(48, 24, 0.5, 99);
    Engine a(cfg_for(img, 12));
    Engine b(cfg_for(img, 12));
    FrameResult r1 = a.process_frame(img);
    FrameResult r2 = b.process_frame(img);
    CHECK(r1.provisional == r2.provisional);
    CHECK(r1.final == r2.final);
    CHECK(r1.final_table == r2.final_table);
    CHECK(r1.stats == r2.stats);
}

TEST_CASE("back-to-back frames reuse the engine without label leakage") {
    BinaryImage a = random_image(32, 16, 0.4, 7);
    BinaryImage b = random_image(32, 16, 0.6, 8);
    EngineConfig cfg = cfg_for(a, 12);
    Engine engine(cfg);
    FrameResult ra = engine.process_frame(a);
    FrameResult rb = engine.process_frame(b);

    Engine fresh_engine(cfg);
    FrameResult rb_fresh = fresh_engine.process_frame(b);
    // Second frame must be independent of the first.
    CHECK(rb.final == rb_fresh.final);
    CHECK(rb.stats == rb_fresh.stats);
    REQUIRE(ra.ok());
    REQUIRE(rb.ok());
}

TEST_CASE("stream conservation holds with and without pauses") {
    for (std::uint32_t seed = 0; seed < 8; ++seed) {
        BinaryImage img = random_image(40, 12, 0.65, seed + 100);
        FrameResult res = run_frame(img, 12);
        REQUIRE(res.ok());
        CHECK(res.stats.consumed_groups == 10 * 12);
        CHECK(res.stats.total() ==
              res.stats.active_cycles + res.stats.pause_cycles + res.stats.drain_cycles);
        CHECK(res.stats.pause_cycles == res.stats.conflict_histogram[2]);
    }
}

TEST_CASE("label exhaustion aborts the frame but returns stats") {
    BinaryImage img = gen_pattern(PatternKind::max_labels, {.width = 64, .height = 64, .count = 20});
    FrameResult res = run_frame(img, 4);  // max 15 labels
    CHECK(res.status == FrameStatus::label_exhausted);
    CHECK(res.stats.peak_label == 15);
    CHECK(res.stats.consumed_groups < 64 / 4 * 64);

    // The engine stays usable for the next frame.
    BinaryImage ok = BinaryImage::zeros(64, 64);
    Engine engine(cfg_for(img, 4));
    CHECK(engine.process_frame(img).status == FrameStatus::label_exhausted);
    CHECK(engine.process_frame(ok).ok());
}

TEST_CASE("exact label budget base cases") {
    BinaryImage fits = gen_pattern(PatternKind::max_labels, {.width = 16, .height = 16, .count = 15});
    CHECK(run_frame(fits, 4).ok());
    BinaryImage bust = gen_pattern(PatternKind::max_labels, {.width = 16, .height = 16, .count = 16});
    CHECK(run_frame(bust, 4).status == FrameStatus::label_exhausted);
}

TEST_CASE("realtime_check arithmetic at the UHD operating point") {
    EngineConfig cfg;
    cfg.width = 3840;
    cfg.height = 2160;
    FrameStats stats;
    stats.active_cycles = 2'073'600;
    stats.pause_cycles = 0;
    stats.drain_cycles = 2 * 2160;
    stats.interframe_cycles = 2 * 1024;
    RealtimeVerdict v = realtime_check(stats, cfg);
    CHECK(v.cycle_budget == 2'221'666);
    CHECK(v.cycle_budget - 2'073'600 == 148'066);  // headroom over the bare pixel stream
    CHECK(v.pass);
    CHECK(v.slack == 2'221'666 - (2'073'600 + 4320 + 2048));

    stats.pause_cycles = 200'000;
    CHECK(!realtime_check(stats, cfg).pass);
}

namespace {

/// Rebuilds every context window from the stored previous row and the live
/// table; the incremental window must agree with the straight-line recode.
struct ContextChecker : EngineObserver {
    int width;
    std::vector<Label> prev_row;
    std::vector<Label> cur_row;
    long long mismatches = 0;
    long long groups_seen = 0;

    explicit ContextChecker(int w) : width(w), prev_row(static_cast<std::size_t>(w), 0), cur_row(prev_row) {}

    void on_group(const NeighbourContext& ctx, const AssignerOutput& out, const EquivalenceTable& t,
                  const MergerList& pending) override {
        ++groups_seen;
        for (int i = 0; i < 6; ++i) {
            const int col = ctx.group * 4 - 1 + i;
            Label expect = 0;
            if (ctx.row > 0 && col >= 0 && col < width)
                expect = recode_pending(t.root_of(prev_row[static_cast<std::size_t>(col)]), pending);
            if (ctx.prev_row[static_cast<std::size_t>(i)] != expect) ++mismatches;
        }
        for (int i = 0; i < 4; ++i) cur_row[static_cast<std::size_t>(ctx.group * 4 + i)] = out.labels.labels[static_cast<std::size_t>(i)];
        if (ctx.group == width / 4 - 1) std::swap(prev_row, cur_row);
    }
};

/// Replays committed writes and chain resolutions into union-find; the final
/// table must induce exactly the same partition.
struct EquivalenceChecker : EngineObserver {
    DisjointSet uf;
    explicit EquivalenceChecker(std::size_t n) : uf(n) {}
    void on_table_write(const TableWrite& w) override { uf.unite(w.address, w.data); }
    void on_chain_resolve(Label larger, Label data) override { uf.unite(larger, data); }
};

/// After each line's drain, every label this row merged must be flat.
struct DrainChecker : EngineObserver {
    std::vector<Label> touched;
    long long violations = 0;
    void on_table_write(const TableWrite& w) override {
        touched.push_back(w.address);
        touched.push_back(w.data);
    }
    void on_line_end(int, const EquivalenceTable& t) override {
        for (Label x : touched)
            if (t.at(t.at(x)) != t.at(x)) ++violations;
        touched.clear();
    }
};

}  // namespace

TEST_CASE("context windows match the straight-line reference on random frames") {
    for (std::uint32_t seed = 0; seed < 30; ++seed) {
        const int w = 4 * (2 + static_cast<int>(seed % 11));
        const int h = 3 + static_cast<int>(seed % 13);
        BinaryImage img = random_image(w, h, 0.2 + 0.06 * (seed % 11), seed + 1000);
        Engine engine(cfg_for(img, 12));
        ContextChecker checker(w);
        engine.set_observer(&checker);
        FrameResult res = engine.process_frame(img);
        REQUIRE(res.ok());
        CHECK(checker.groups_seen == w / 4 * h);
        CHECK(checker.mismatches == 0);
    }
}

TEST_CASE("final table partitions agree with a union-find replay of the events") {
    for (std::uint32_t seed = 0; seed < 30; ++seed) {
        BinaryImage img = random_image(48, 20, 0.3 + 0.05 * (seed % 10), seed + 2000);
        Engine engine(cfg_for(img, 12));
        EquivalenceChecker checker(std::size_t(1) << 12);
        engine.set_observer(&checker);
        FrameResult res = engine.process_frame(img);
        REQUIRE(res.ok());
        for (Label x = 1; x <= res.stats.peak_label; ++x)
            for (Label y = x; y <= res.stats.peak_label; ++y) {
                const bool same_table = res.final_table.at(x) == res.final_table.at(y);
                CHECK(same_table == checker.uf.same(x, y));
            }
    }
}

TEST_CASE("no chain deeper than one level survives a line drain") {
    for (std::uint32_t seed = 0; seed < 40; ++seed) {
        BinaryImage img = random_image(64, 24, 0.35 + 0.015 * seed, seed + 3000);
        Engine engine(cfg_for(img, 12));
        DrainChecker checker;
        engine.set_observer(&checker);
        FrameResult res = engine.process_frame(img);
        REQUIRE(res.ok());
        CHECK(checker.violations == 0);
    }
}

TEST_CASE("mini-fuzz against the oracle") {
    std::mt19937 rng(4242);
    for (int frame = 0; frame < 400; ++frame) {
        const int w = 4 * (4 + static_cast<int>(rng() % 15));
        const int h = 8 + static_cast<int>(rng() % 40);
        const double density = 0.05 + 0.9 * (rng() % 1000) / 999.0;
        BinaryImage img = random_image(w, h, density, rng());
        FrameResult res = run_frame(img, 13);
        REQUIRE(res.ok());
        const bool match = equivalent_up_to_relabeling(res.final, label_reference(img));
        CHECK(match);
        CHECK(res.final_table.idempotent());
        CHECK(res.final_table.downward_pointing());
    }
}
