#include "quadlabel/stream.hpp"

#include <stdexcept>

namespace quadlabel {

const char* to_string(FrameStatus s) {
    switch (s) {
        case FrameStatus::ok: return "ok";
        case FrameStatus::label_exhausted: return "label exhausted";
        case FrameStatus::stack_overflow: return "chain stack overflow";
        case FrameStatus::bank_not_ready: return "equivalence bank not ready";
        case FrameStatus::conflict_arity: return "conflict arity exceeded";
    }
    return "unknown";
}

std::vector<PixelGroup> pack_frame(const BinaryImage& img) {
    if (img.width < kGroupWidth || img.width % kGroupWidth != 0)
        throw std::invalid_argument("image width must be a positive multiple of 4");
    if (img.height < 1) throw std::invalid_argument("image height must be at least 1");
    if (img.data.size() != static_cast<std::size_t>(img.width) * img.height)
        throw std::invalid_argument("image data size does not match dimensions");
    for (std::uint8_t v : img.data)
        if (v > 1) throw std::invalid_argument("image data must be binary");

    const int gpr = img.width / kGroupWidth;
    std::vector<PixelGroup> out;
    out.reserve(static_cast<std::size_t>(gpr) * img.height);
    for (int r = 0; r < img.height; ++r) {
        for (int g = 0; g < gpr; ++g) {
            PixelGroup pg;
            for (int i = 0; i < kGroupWidth; ++i) pg.pixels[static_cast<std::size_t>(i)] = img.at(r, g * kGroupWidth + i);
            pg.sof = (r == 0 && g == 0);
            pg.eol = (g == gpr - 1);
            pg.valid = true;
            out.push_back(pg);
        }
    }
    return out;
}

LabelImage unpack_labels(const std::vector<LabelGroup>& groups, int width, int height) {
    if (width < kGroupWidth || width % kGroupWidth != 0)
        throw std::invalid_argument("width must be a positive multiple of 4");
    const int gpr = width / kGroupWidth;
    if (groups.size() != static_cast<std::size_t>(gpr) * height)
        throw std::invalid_argument("group count does not match frame dimensions");

    LabelImage img = LabelImage::zeros(width, height);
    std::size_t idx = 0;
    for (int r = 0; r < height; ++r) {
        for (int g = 0; g < gpr; ++g, ++idx) {
            for (int i = 0; i < kGroupWidth; ++i)
                img.at(r, g * kGroupWidth + i) = groups[idx].labels[static_cast<std::size_t>(i)];
        }
    }
    return img;
}

}  // namespace quadlabel
