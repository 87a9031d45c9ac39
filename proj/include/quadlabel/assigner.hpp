#pragma once

#include <optional>
#include <vector>

#include "quadlabel/context.hpp"
#include "quadlabel/types.hpp"

namespace quadlabel {

struct PixelDecision {
    Label label = 0;
    std::optional<Merger> merger;
    FrameStatus status = FrameStatus::ok;
};

/// Label one pixel from its recoded neighbourhood. The left label only
/// participates when the upper-left cell is background: a foreground
/// upper-left was already merged against the left pixel when that pixel was
/// labelled, so consulting both would only re-report known equivalences while
/// hiding the pair the previous row still owes us.
///
/// Background -> 0. Empty neighbourhood -> counter+1 (counter advances).
/// Otherwise the minimum foreground neighbour label; two distinct values
/// a < b additionally emit the raw merger b -> a.
PixelDecision pixel_label(Label upper_left, Label up, Label upper_right, Label left,
                          bool foreground, Label& counter, Label max_label);

/// Verbatim merger-analysis branches for a two-conflict group. Returns the
/// chain flags for (m1, m2).
void analyse_mergers(Merger& m1, Merger& m2);

struct AssignerOutput {
    LabelGroup labels;
    MergerList mergers;   // normalised, chain flags set
    bool pause = false;   // two mergers need a second table-write cycle
    Label next_left = 0;  // G for the next group (0 past end of line)
    FrameStatus status = FrameStatus::ok;
};

/// Sequential four-pixel labeller with the global label counter.
class LabelAssigner {
public:
    explicit LabelAssigner(int bits = 10) { configure(bits); }

    void configure(int bits) {
        max_label_ = (Label(1) << bits) - 1;
        counter_ = 0;
    }

    /// Start of frame: label numbering restarts at 1.
    void reset_counter() { counter_ = 0; }

    AssignerOutput assign_group(const NeighbourContext& ctx, bool sof, bool eol,
                                const MergerList& last_mergers);

    Label counter() const { return counter_; }
    Label max_label() const { return max_label_; }

private:
    Label counter_ = 0;
    Label max_label_ = 1023;
};

}  // namespace quadlabel
