#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace quadlabel {

using Label = std::uint32_t;

inline constexpr int kGroupWidth = 4;

/// Four binary pixels travelling together, P3 (leftmost) to P0 (rightmost).
struct PixelGroup {
    std::array<std::uint8_t, 4> pixels{};  // [0] = P3 .. [3] = P0
    bool sof = false;                      // start of frame (tuser)
    bool eol = false;                      // end of line (tlast)
    bool valid = true;                     // tvalid

    friend bool operator==(const PixelGroup&, const PixelGroup&) = default;
};

/// Labels for one group, framing flags mirrored from the pixel stream.
struct LabelGroup {
    std::array<Label, 4> labels{};
    bool sof = false;
    bool eol = false;

    friend bool operator==(const LabelGroup&, const LabelGroup&) = default;
};

/// Row-major binary image; 0 = background, 1 = foreground.
struct BinaryImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> data;

    static BinaryImage zeros(int w, int h) {
        return BinaryImage{w, h, std::vector<std::uint8_t>(static_cast<std::size_t>(w) * h, 0)};
    }
    std::uint8_t at(int r, int c) const { return data[static_cast<std::size_t>(r) * width + c]; }
    std::uint8_t& at(int r, int c) { return data[static_cast<std::size_t>(r) * width + c]; }

    friend bool operator==(const BinaryImage&, const BinaryImage&) = default;
};

/// Row-major label image; 0 = background.
struct LabelImage {
    int width = 0;
    int height = 0;
    std::vector<Label> data;

    static LabelImage zeros(int w, int h) {
        return LabelImage{w, h, std::vector<Label>(static_cast<std::size_t>(w) * h, 0)};
    }
    Label at(int r, int c) const { return data[static_cast<std::size_t>(r) * width + c]; }
    Label& at(int r, int c) { return data[static_cast<std::size_t>(r) * width + c]; }

    friend bool operator==(const LabelImage&, const LabelImage&) = default;
};

/// An ordered conflict: `larger` is redirected to `smaller` (larger > smaller > 0).
struct Merger {
    Label larger = 0;
    Label smaller = 0;
    bool chain = false;  // also route a copy to the chain stack

    friend bool operator==(const Merger&, const Merger&) = default;
};

/// At most two mergers leave a group; fixed storage keeps the hot loop allocation-free.
struct MergerList {
    std::array<Merger, 2> items{};
    int count = 0;

    void push(const Merger& m) { items[static_cast<std::size_t>(count++)] = m; }
    void clear() { count = 0; }
    bool empty() const { return count == 0; }
    bool contains_pair(Label larger, Label smaller) const {
        for (int i = 0; i < count; ++i)
            if (items[static_cast<std::size_t>(i)].larger == larger &&
                items[static_cast<std::size_t>(i)].smaller == smaller)
                return true;
        return false;
    }
    Merger& operator[](int i) { return items[static_cast<std::size_t>(i)]; }
    const Merger& operator[](int i) const { return items[static_cast<std::size_t>(i)]; }
    const Merger* begin() const { return items.data(); }
    const Merger* end() const { return items.data() + count; }

    friend bool operator==(const MergerList& a, const MergerList& b) {
        if (a.count != b.count) return false;
        for (int i = 0; i < a.count; ++i)
            if (!(a[i] == b[i])) return false;
        return true;
    }
};

enum class FrameStatus {
    ok,
    label_exhausted,   // fresh label would exceed 2^bits - 1
    stack_overflow,    // chain stack capacity exceeded
    bank_not_ready,    // standby equivalence bank not reinitialised in time
    conflict_arity,    // more than two distinct conflicts met in one group
};

const char* to_string(FrameStatus s);

}  // namespace quadlabel
