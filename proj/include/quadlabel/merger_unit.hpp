#pragma once

#include <array>

#include "quadlabel/equivalence.hpp"
#include "quadlabel/types.hpp"

namespace quadlabel {

/// Micro-operations for committing one group's mergers. Only one table cell
/// can change per clock, so a two-merger group costs one extra (pause) cycle.
struct MergerSchedule {
    std::array<TableWrite, 2> writes{};
    int write_count = 0;
    std::array<StackPush, 2> pushes{};
    int push_count = 0;
    int extra_cycles = 0;
};

inline MergerSchedule schedule_mergers(const MergerList& mergers) {
    MergerSchedule s;
    for (const Merger& m : mergers) {
        s.writes[static_cast<std::size_t>(s.write_count++)] = TableWrite{m.larger, m.smaller};
        if (m.chain) s.pushes[static_cast<std::size_t>(s.push_count++)] = StackPush{m.larger, m.smaller};
    }
    s.extra_cycles = (mergers.count == 2) ? 1 : 0;
    return s;
}

}  // namespace quadlabel
