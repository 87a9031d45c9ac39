#pragma once

#include "quadlabel/types.hpp"

namespace quadlabel {

/// Substitute labels through mergers that have not reached the table yet.
/// The pending mergers are normalised, so their larger labels are distinct
/// and one simultaneous substitution pass suffices.
inline Label recode_pending(Label x, const MergerList& pending) {
    for (const Merger& m : pending)
        if (x == m.larger) return m.smaller;
    return x;
}

inline LabelGroup recode_with_pending(const LabelGroup& g, const MergerList& pending) {
    LabelGroup out = g;
    for (auto& l : out.labels) l = recode_pending(l, pending);
    return out;
}

}  // namespace quadlabel
