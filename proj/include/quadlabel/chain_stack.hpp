#pragma once

#include <utility>
#include <vector>

#include "quadlabel/equivalence.hpp"
#include "quadlabel/types.hpp"

namespace quadlabel {

/// Per-row store of chain mergers, drained between lines. Entries come back
/// in insertion order: the write address returns to 0 at each end of line, so
/// ascending chains collapse in a single pass when resolved through the table.
class ChainStack {
public:
    explicit ChainStack(std::size_t capacity) : capacity_(capacity) { entries_.reserve(capacity); }

    [[nodiscard]] bool push(const StackPush& e) {
        if (entries_.size() >= capacity_) return false;
        entries_.push_back(e);
        return true;
    }

    /// Yields all entries in insertion order and empties the stack.
    std::vector<StackPush> drain() {
        std::vector<StackPush> out = std::move(entries_);
        entries_.clear();
        entries_.reserve(capacity_);
        return out;
    }

    std::size_t size() const { return entries_.size(); }
    std::size_t capacity() const { return capacity_; }
    void clear() { entries_.clear(); }

private:
    std::size_t capacity_;
    std::vector<StackPush> entries_;
};

}  // namespace quadlabel
