#include "quadlabel/assigner.hpp"

#include <algorithm>

#include "quadlabel/recode.hpp"

namespace quadlabel {

PixelDecision pixel_label(Label upper_left, Label up, Label upper_right, Label left,
                          bool foreground, Label& counter, Label max_label) {
    PixelDecision out;
    if (!foreground) return out;

    Label candidates[3];
    if (upper_left) {
        candidates[0] = upper_left;
        candidates[1] = up;
        candidates[2] = upper_right;
    } else {
        candidates[0] = up;
        candidates[1] = upper_right;
        candidates[2] = left;
    }
    Label a = 0;
    Label b = 0;
    for (Label c : candidates) {
        if (c == 0 || c == a || c == b) continue;
        if (a == 0)
            a = c;
        else if (b == 0)
            b = c;
        else {
            out.status = FrameStatus::conflict_arity;
            return out;
        }
    }

    if (a == 0) {
        if (counter >= max_label) {
            out.status = FrameStatus::label_exhausted;
            return out;
        }
        out.label = ++counter;
        return out;
    }
    if (b == 0) {
        out.label = a;
        return out;
    }
    const Label lo = std::min(a, b);
    const Label hi = std::max(a, b);
    out.label = lo;
    out.merger = Merger{hi, lo, false};
    return out;
}

void analyse_mergers(Merger& m1, Merger& m2) {
    if (m1.larger == m2.larger) {
        // Same label lost twice: redirect so both writes aim at the minimum.
        if (m1.smaller > m2.smaller) {
            m1.larger = m1.smaller;
            m1.smaller = m2.smaller;
        } else {
            m2.larger = m2.smaller;
            m2.smaller = m1.smaller;
        }
        m1.chain = true;
        m2.chain = true;
    } else if (m1.larger == m2.smaller) {
        // The second merger targets a label that just lost; follow it down.
        m2.smaller = m1.smaller;
        m1.chain = false;
        m2.chain = false;
    } else if (m1.smaller == m2.larger) {
        // The first merger's target loses within the same group; connect it
        // directly and let the drain re-resolve both entries.
        m1.smaller = m2.smaller;
        m1.chain = true;
        m2.chain = true;
    } else {
        m1.chain = true;
        m2.chain = false;
    }
}

AssignerOutput LabelAssigner::assign_group(const NeighbourContext& ctx, bool sof, bool eol,
                                           const MergerList& last_mergers) {
    AssignerOutput out;
    out.labels.sof = sof;
    out.labels.eol = eol;

    // The context and the left pixel are recoded through the conflicts of the
    // previous valid group before any labelling happens.
    std::array<Label, 6> w = ctx.prev_row;
    for (auto& x : w) x = recode_pending(x, last_mergers);
    Label left = recode_pending(ctx.left, last_mergers);

    for (int i = 0; i < kGroupWidth; ++i) {
        const auto idx = static_cast<std::size_t>(i);
        PixelDecision d = pixel_label(w[idx], w[idx + 1], w[idx + 2], left,
                                      ctx.pixels[idx] != 0, counter_, max_label_);
        if (d.status != FrameStatus::ok) {
            out.status = d.status;
            return out;
        }
        out.labels.labels[idx] = d.label;
        left = d.label;
        if (d.merger && !out.mergers.contains_pair(d.merger->larger, d.merger->smaller)) {
            if (out.mergers.count == 2) {
                out.status = FrameStatus::conflict_arity;
                return out;
            }
            out.mergers.push(*d.merger);
        }
    }

    if (out.mergers.count == 2) {
        analyse_mergers(out.mergers[0], out.mergers[1]);
        out.pause = true;
    }
    // Every merger's target can still lose later in the row, which leaves the
    // fresh table entry one level deep. Routing them all through the stack
    // keeps the inter-line repair complete; redundant entries re-resolve to
    // the value already present.
    for (int i = 0; i < out.mergers.count; ++i) out.mergers[i].chain = true;

    out.next_left = eol ? 0 : out.labels.labels[3];
    return out;
}

}  // namespace quadlabel
