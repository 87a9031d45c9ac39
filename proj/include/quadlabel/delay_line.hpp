#pragma once

#include <cassert>
#include <vector>

#include "quadlabel/types.hpp"

namespace quadlabel {

/// Circular buffer of label groups, one image row long. In read-first order
/// the output at step k equals the input of step k - length.
class DelayLine {
public:
    explicit DelayLine(int length) : slots_(static_cast<std::size_t>(length)) { assert(length >= 1); }

    LabelGroup exchange(const LabelGroup& in) {
        LabelGroup out = slots_[cursor_];
        slots_[cursor_] = in;
        cursor_ = (cursor_ + 1) % slots_.size();
        return out;
    }

    /// Slot the exchange will read `ahead` steps from now (0 = next exchange).
    /// Lets the context window run ahead of the write position, the way the
    /// hardware shortens the physical buffer.
    const LabelGroup& peek(std::size_t ahead = 0) const {
        return slots_[(cursor_ + ahead) % slots_.size()];
    }

    void reset() {
        for (auto& s : slots_) s = LabelGroup{};
        cursor_ = 0;
    }

    std::size_t length() const { return slots_.size(); }

private:
    std::vector<LabelGroup> slots_;
    std::size_t cursor_ = 0;
};

}  // namespace quadlabel
