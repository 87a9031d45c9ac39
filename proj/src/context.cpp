#include "quadlabel/context.hpp"

#include "quadlabel/recode.hpp"

namespace quadlabel {

NeighbourContext ContextGenerator::step_valid(const PixelGroup& in, const LabelGroup& delayed,
                                              const MergerList& pending) {
    // Red path: keep every held label current with the previous group's mergers.
    if (pending.count > 0) {
        carry_l5_ = recode_pending(carry_l5_, pending);
        mid_ = recode_with_pending(mid_, pending);
        right_ = recode_with_pending(right_, pending);
    }

    // Shift one group position; the incoming group arrives fully recoded.
    carry_l5_ = mid_.labels[3];
    mid_ = right_;
    right_ = delayed;

    NeighbourContext ctx;
    ctx.row = row_;
    ctx.group = group_;
    ctx.pixels = in.pixels;
    if (row_ > 0) {
        if (gpr_ == 1) {
            // Single group per row: the delayed group itself is the window.
            for (int i = 0; i < 4; ++i) ctx.prev_row[static_cast<std::size_t>(i + 1)] = right_.labels[static_cast<std::size_t>(i)];
        } else {
            ctx.prev_row[0] = carry_l5_;
            for (int i = 0; i < 4; ++i) ctx.prev_row[static_cast<std::size_t>(i + 1)] = mid_.labels[static_cast<std::size_t>(i)];
            ctx.prev_row[5] = right_.labels[0];
        }
    }
    // Edge zeroing: no neighbours beyond the frame borders.
    if (group_ == 0) ctx.prev_row[0] = 0;
    if (group_ == gpr_ - 1) ctx.prev_row[5] = 0;
    ctx.left = (group_ == 0) ? 0 : left_;

    ++group_;
    if (in.eol) {
        group_ = 0;
        ++row_;
    }
    return ctx;
}

void ContextGenerator::step_chain_recode(const Merger& m) {
    MergerList one;
    one.push(m);
    carry_l5_ = recode_pending(carry_l5_, one);
    mid_ = recode_with_pending(mid_, one);
    right_ = recode_with_pending(right_, one);
}

}  // namespace quadlabel
