#include "quadlabel/pipeline.hpp"

#include <stdexcept>

#include "quadlabel/merger_unit.hpp"
#include "quadlabel/recode.hpp"
#include "quadlabel/stream.hpp"

namespace quadlabel {

Engine::Engine(const EngineConfig& cfg)
    : cfg_(cfg),
      gpr_(cfg.width / kGroupWidth),
      assigner_(cfg.label_bits),
      context_(cfg.width >= kGroupWidth ? cfg.width / kGroupWidth : 1),
      delay_(cfg.width >= kGroupWidth ? cfg.width / kGroupWidth : 1),
      stack_(static_cast<std::size_t>(2) * (cfg.width >= kGroupWidth ? cfg.width / kGroupWidth : 1)),
      banks_(cfg.label_bits) {
    if (cfg.label_bits < 1 || cfg.label_bits > 16)
        throw std::invalid_argument("label_bits must be in 1..16");
    if (cfg.width < kGroupWidth || cfg.width % kGroupWidth != 0)
        throw std::invalid_argument("width must be a positive multiple of 4");
    if (cfg.height < 1) throw std::invalid_argument("height must be at least 1");
    if (cfg.fps < 1) throw std::invalid_argument("fps must be positive");
}

FrameResult Engine::process_frame(const BinaryImage& img) {
    if (img.width != cfg_.width || img.height != cfg_.height)
        throw std::invalid_argument("frame dimensions do not match engine configuration");
    const std::vector<PixelGroup> groups = pack_frame(img);

    FrameResult res{FrameStatus::ok, LabelImage{}, EquivalenceTable(cfg_.label_bits), LabelImage{}, {}};
    FrameStats& stats = res.stats;

    res.status = banks_.begin_frame();
    if (res.status != FrameStatus::ok) return res;
    EquivalenceTable& table = banks_.operating();

    assigner_.reset_counter();
    context_.reset();
    delay_.reset();
    stack_.clear();
    MergerList pending;

    std::vector<LabelGroup> assigned(groups.size());
    std::size_t produced = 0;
    int row = 0;

    for (const PixelGroup& in : groups) {
        // Previous-row group one position ahead of the current one; with a
        // single group per row the about-to-be-exchanged slot is the window.
        const LabelGroup& raw = (gpr_ == 1) ? delay_.peek(0) : delay_.peek(1);
        const LabelGroup fed = recode_with_pending(table.recode_roots(raw), pending);

        const NeighbourContext ctx = context_.step_valid(in, fed, pending);
        const AssignerOutput out = assigner_.assign_group(ctx, in.sof, in.eol, pending);
        if (out.status != FrameStatus::ok) {
            res.status = out.status;
            break;
        }

        ++stats.active_cycles;
        ++stats.consumed_groups;
        ++stats.conflict_histogram[static_cast<std::size_t>(out.mergers.count)];
        if (observer_) observer_->on_group(ctx, out, table, pending);

        // The detected labels are what the context showed; an entry written
        // earlier this row may since have gone one level deep, so each pair is
        // re-rooted through the table (and through the writes queued ahead of
        // it) before committing. An already-linked pair needs no write.
        MergerList committed;
        auto root_through = [&table, &committed](Label x) {
            for (;;) {
                Label next = table.at(x);
                for (const Merger& q : committed)
                    if (x == q.larger) next = q.smaller;
                if (next == x) return x;
                x = next;
            }
        };
        for (const Merger& m : out.mergers) {
            const Label ra = root_through(m.larger);
            const Label rb = root_through(m.smaller);
            if (ra == rb) continue;
            committed.push(Merger{std::max(ra, rb), std::min(ra, rb), m.chain});
        }

        const MergerSchedule sched = schedule_mergers(committed);
        stats.pause_cycles += (out.mergers.count == 2) ? 1 : 0;
        for (int i = 0; i < sched.write_count; ++i) {
            table.record(sched.writes[static_cast<std::size_t>(i)]);
            if (observer_) observer_->on_table_write(sched.writes[static_cast<std::size_t>(i)]);
        }
        bool overflow = false;
        for (int i = 0; i < sched.push_count; ++i) {
            if (!stack_.push(sched.pushes[static_cast<std::size_t>(i)])) {
                overflow = true;
                break;
            }
            ++stats.chain_pushes;
        }
        if (overflow) {
            res.status = FrameStatus::stack_overflow;
            break;
        }

        delay_.exchange(out.labels);
        context_.set_left(out.next_left);
        assigned[produced++] = out.labels;
        pending = out.mergers;

        if (in.eol) {
            // Newest entries first: a merger's target only moves through
            // conflicts detected after it, so resolving in reverse leaves
            // every address of this row pointing at its final representative.
            const std::vector<StackPush> entries = stack_.drain();
            for (auto it = entries.rbegin(); it != entries.rend(); ++it) {
                const Label data = table.resolve_chain(it->larger, it->smaller);
                context_.step_chain_recode(Merger{it->larger, data, true});
                if (observer_) observer_->on_chain_resolve(it->larger, data);
                ++stats.drain_cycles;
            }
            stats.drain_cycles += static_cast<std::uint64_t>(cfg_.line_drain_overhead);
            if (observer_) observer_->on_line_end(row, table);
            ++row;
        }
    }

    stats.peak_label = assigner_.counter();

    // Retire the bank either way so the engine stays usable; aborted frames
    // keep their partially assigned labels for diagnosis.
    res.provisional = unpack_labels(assigned, cfg_.width, cfg_.height);
    banks_.finish_frame();
    stats.interframe_cycles += table.size();
    res.final_table = table;
    banks_.reinitialise_retired();
    stats.interframe_cycles += table.size();
    if (res.status == FrameStatus::ok) res.final = second_pass(res.provisional, res.final_table);
    return res;
}

LabelImage second_pass(const LabelImage& provisional, const EquivalenceTable& table) {
    LabelImage out = provisional;
    for (auto& l : out.data) l = table.recode_one(l);
    return out;
}

RealtimeVerdict realtime_check(const FrameStats& stats, const EngineConfig& cfg) {
    RealtimeVerdict v;
    v.cycle_budget = cfg.clock_hz / static_cast<std::uint64_t>(cfg.fps);
    v.frame_cycles = stats.total();
    v.interframe_cycles = stats.interframe_cycles;
    const std::uint64_t needed = v.frame_cycles + v.interframe_cycles;
    v.slack = static_cast<std::int64_t>(v.cycle_budget) - static_cast<std::int64_t>(needed);
    v.pass = needed <= v.cycle_budget;
    return v;
}

}  // namespace quadlabel
