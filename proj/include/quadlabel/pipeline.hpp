#pragma once

#include <cstdint>
#include <string>

#include "quadlabel/assigner.hpp"
#include "quadlabel/chain_stack.hpp"
#include "quadlabel/context.hpp"
#include "quadlabel/delay_line.hpp"
#include "quadlabel/equivalence.hpp"
#include "quadlabel/types.hpp"

namespace quadlabel {

struct EngineConfig {
    int label_bits = 10;
    int width = 0;
    int height = 0;
    std::uint64_t clock_hz = 133'300'000;
    int fps = 60;
    int line_drain_overhead = 2;  // stack pointer reset + turnaround per line

    int groups_per_row() const { return width / kGroupWidth; }
};

struct FrameStats {
    std::uint64_t active_cycles = 0;      // one per valid group
    std::uint64_t pause_cycles = 0;       // one per two-conflict group
    std::uint64_t drain_cycles = 0;       // chain entries + per-line overhead
    std::uint64_t interframe_cycles = 0;  // final recode + reinitialisation
    std::uint64_t chain_pushes = 0;
    std::uint64_t consumed_groups = 0;
    Label peak_label = 0;
    std::array<std::uint64_t, 3> conflict_histogram{};  // groups with 0/1/2 mergers

    std::uint64_t total() const { return active_cycles + pause_cycles + drain_cycles; }

    friend bool operator==(const FrameStats&, const FrameStats&) = default;
};

struct FrameResult {
    FrameStatus status = FrameStatus::ok;
    LabelImage provisional;        // first-pass labels as assigned
    EquivalenceTable final_table;  // after final recoding
    LabelImage final;              // provisional recoded through final_table
    FrameStats stats;

    bool ok() const { return status == FrameStatus::ok; }
};

struct RealtimeVerdict {
    std::uint64_t cycle_budget = 0;  // clock_hz / fps, floored
    std::uint64_t frame_cycles = 0;
    std::uint64_t interframe_cycles = 0;
    std::int64_t slack = 0;
    bool pass = false;
};

/// Test hooks; every callback defaults to a no-op.
struct EngineObserver {
    virtual ~EngineObserver() = default;
    virtual void on_group(const NeighbourContext&, const AssignerOutput&,
                          const EquivalenceTable&, const MergerList& /*pending*/) {}
    virtual void on_table_write(const TableWrite&) {}
    virtual void on_chain_resolve(Label /*larger*/, Label /*data*/) {}
    virtual void on_line_end(int /*row*/, const EquivalenceTable&) {}
};

/// The full labelling engine: context generation, sequential assignment,
/// merger bookkeeping, per-line chain drain, double-buffered tables and the
/// cycle ledger. One engine instance processes frames back to back.
class Engine {
public:
    explicit Engine(const EngineConfig& cfg);

    /// Runs one frame through the serial group loop. Invalid frames (label
    /// exhaustion, stack overflow) abort early but still carry their stats.
    FrameResult process_frame(const BinaryImage& img);

    const EngineConfig& config() const { return cfg_; }
    void set_observer(EngineObserver* obs) { observer_ = obs; }

private:
    EngineConfig cfg_;
    int gpr_;
    LabelAssigner assigner_;
    ContextGenerator context_;
    DelayLine delay_;
    ChainStack stack_;
    BankPair banks_;
    EngineObserver* observer_ = nullptr;
};

/// Pointwise map through a finally-recoded table.
LabelImage second_pass(const LabelImage& provisional, const EquivalenceTable& table);

/// Compare a frame's cycle consumption against the per-frame clock budget.
RealtimeVerdict realtime_check(const FrameStats& stats, const EngineConfig& cfg);

}  // namespace quadlabel
