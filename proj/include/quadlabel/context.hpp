#pragma once

#include <array>

#include "quadlabel/types.hpp"

namespace quadlabel {

/// The 11-element neighbourhood handed to the label assigner: six labels
/// from the previous row (L5 upper-left diagonal .. L0 upper-right diagonal),
/// the label G of the pixel on the left, and the four pixels to label.
struct NeighbourContext {
    std::array<Label, 6> prev_row{};  // [0] = L5 .. [5] = L0
    Label left = 0;                   // G
    std::array<std::uint8_t, 4> pixels{};
    int row = 0;
    int group = 0;

    friend bool operator==(const NeighbourContext&, const NeighbourContext&) = default;
};

/// Sliding window over the previous row's labels. Holds the prior group's
/// rightmost label plus two recoded label groups so the window covers columns
/// 4g-1 .. 4g+4. On every valid step the held labels are recoded through the
/// mergers of the previous group before the window shifts; during the
/// inter-line chain drain they are recoded in place without shifting.
class ContextGenerator {
public:
    explicit ContextGenerator(int groups_per_row = 1) { configure(groups_per_row); }

    void configure(int groups_per_row) {
        gpr_ = groups_per_row;
        reset();
    }

    void reset() {
        carry_l5_ = 0;
        mid_ = LabelGroup{};
        right_ = LabelGroup{};
        left_ = 0;
        row_ = 0;
        group_ = 0;
    }

    /// Consume one valid pixel group. `delayed` is the previous-row group one
    /// position ahead of the current one, already recoded through the
    /// equivalence table and the pending mergers.
    NeighbourContext step_valid(const PixelGroup& in, const LabelGroup& delayed,
                                const MergerList& pending);

    /// Inter-line chain drain: substitute one merger into the held labels.
    /// Positions do not shift.
    void step_chain_recode(const Merger& m);

    /// The pipeline reports the label assigned to the rightmost pixel; it
    /// becomes G for the next group on the same line.
    void set_left(Label next_left) { left_ = next_left; }

    int row() const { return row_; }
    int group() const { return group_; }

private:
    int gpr_ = 1;
    Label carry_l5_ = 0;  // previous-row label at column 4g-1
    LabelGroup mid_;      // previous-row columns 4g .. 4g+3
    LabelGroup right_;    // previous-row columns 4g+4 .. 4g+7
    Label left_ = 0;
    int row_ = 0;
    int group_ = 0;
};

}  // namespace quadlabel
