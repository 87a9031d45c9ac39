#include "quadlabel/patterns.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace quadlabel {
namespace {

void require(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
}

BinaryImage canvas(const PatternParams& p, int min_w, int min_h) {
    const int w = p.width > 0 ? p.width : min_w;
    const int h = p.height > 0 ? p.height : min_h;
    require(w >= min_w && h >= min_h, "canvas smaller than the pattern motif");
    require(w % kGroupWidth == 0, "pattern width must be a multiple of 4");
    return BinaryImage::zeros(w, h);
}

// Label factory rows: components enter the window row with chosen counter
// values, using spaced single-pixel burners to consume the skipped numbers.

BinaryImage make_double_merger(const PatternParams& p) {
    BinaryImage img = canvas(p, 32, 4);
    // Three stems reach the window row carrying labels 1, 4 and 7.
    for (int c : {15, 21, 23}) img.at(0, c) = 1;
    for (int c : {15, 17, 25, 27}) img.at(1, c) = 1;
    for (int c : {15, 17, 19}) img.at(2, c) = 1;
    // The group that meets 1 and 4 at its first pixel and 4 and 7 at its third.
    for (int c : {16, 17, 18, 19}) img.at(3, c) = 1;
    return img;
}

BinaryImage make_group_chain(const PatternParams& p) {
    BinaryImage img = canvas(p, 24, 4);
    // Window row carries 5, 3, 2 in descending order so one group detects
    // (5->3) and then (3->2).
    for (int c : {11, 19}) img.at(0, c) = 1;
    for (int c : {17, 19, 21}) img.at(1, c) = 1;
    for (int c : {15, 17, 19}) img.at(2, c) = 1;
    for (int c : {16, 17, 18, 19}) img.at(3, c) = 1;
    return img;
}

BinaryImage make_ascending_chain(const PatternParams& p) {
    const int n = p.n;
    require(n >= 1 && n <= 4000, "ascending_chain needs 1 <= n <= 4000");
    const int min_w = 8 * n + 12;
    BinaryImage img = canvas(p, min_w, 4);

    // Component labels follow 2,4,5,7,9 and then step by two.
    std::vector<int> target(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        static const int head[5] = {2, 4, 5, 7, 9};
        target[static_cast<std::size_t>(i)] = i < 5 ? head[i] : 9 + 2 * (i - 4);
    }

    img.at(0, 1) = 1;  // burner taking label 1
    for (int i = 0; i <= n; ++i) {
        const int stem = 8 * i + 5;
        img.at(0, stem) = 1;
        img.at(1, stem) = 1;
        for (int c = stem; c <= stem + 6; ++c) img.at(2, c) = 1;  // window-row run
        if (i >= 1 && target[static_cast<std::size_t>(i)] - target[static_cast<std::size_t>(i - 1)] == 2)
            img.at(0, 8 * (i - 1) + 7) = 1;  // burner between the stems
    }
    for (int i = 0; i < n; ++i) img.at(3, 8 * i + 12) = 1;  // bridges
    return img;
}

BinaryImage make_comb(const PatternParams& p) {
    require(p.width > 0 && p.height > 0, "comb needs explicit width and height");
    BinaryImage img = canvas(p, p.width, p.height);
    for (int r = 0; r < img.height; ++r) {
        if (r % 3 == 0) {
            for (int c = 0; c < img.width; c += 2) img.at(r, c) = 1;  // teeth
        } else if (r % 3 == 1) {
            for (int c = 0; c < img.width; ++c) img.at(r, c) = 1;  // base
        }
    }
    return img;
}

BinaryImage make_checkerboard_pairs(const PatternParams& p) {
    require(p.width > 0 && p.height > 0, "checkerboard_pairs needs explicit width and height");
    BinaryImage img = canvas(p, p.width, p.height);
    // Dots on even columns, then the diagonal partners on odd columns; the
    // partner row merges two components at every other pixel, so every group
    // of it carries two conflicts. A blank row restarts the supply.
    for (int r = 0; r < img.height; ++r) {
        if (r % 3 == 0) {
            for (int c = 0; c < img.width; c += 2) img.at(r, c) = 1;
        } else if (r % 3 == 1) {
            for (int c = 1; c < img.width; c += 2) img.at(r, c) = 1;
        }
    }
    return img;
}

BinaryImage make_spiral(const PatternParams& p) {
    require(p.width > 0 && p.height > 0, "spiral needs explicit width and height");
    BinaryImage img = canvas(p, p.width, p.height);
    // Turtle walk with legs shrinking by two every other turn; arms stay two
    // apart so the only contacts are the shared corners.
    int r = 0, c = 0;
    img.at(0, 0) = 1;
    std::vector<int> legs = {img.width - 1, img.height - 1, img.width - 1};
    const int dr[4] = {0, 1, 0, -1};
    const int dc[4] = {1, 0, -1, 0};
    for (std::size_t k = 0;; ++k) {
        if (k >= legs.size()) legs.push_back(legs[k - 2] - 2);
        const int len = legs[k];
        if (len <= 0) break;
        for (int s = 0; s < len; ++s) {
            r += dr[k % 4];
            c += dc[k % 4];
            img.at(r, c) = 1;
        }
    }
    return img;
}

BinaryImage make_random(const PatternParams& p) {
    require(p.width > 0 && p.height > 0, "random needs explicit width and height");
    require(p.density >= 0.0 && p.density <= 0.96, "random density must be in [0, 0.96]");
    BinaryImage img = canvas(p, p.width, p.height);
    // Blob coverage rather than per-pixel noise: binarised video frames are
    // spatially coherent, and the component count stays inside a small label
    // budget at any resolution.
    std::mt19937 rng(static_cast<std::uint32_t>(p.seed * 0x9e3779b97f4a7c15ULL >> 16));
    const auto total = static_cast<std::int64_t>(img.width) * img.height;
    const auto want = static_cast<std::int64_t>(p.density * static_cast<double>(total));
    std::int64_t painted = 0;

    auto draw = [&](int lo, int hi) {  // inclusive, portable across libraries
        return lo + static_cast<int>(rng() % static_cast<std::uint32_t>(hi - lo + 1));
    };

    const int max_rw = std::max(3, img.width / 6);
    const int max_rh = std::max(3, img.height / 6);
    for (int attempts = 0; painted < want && attempts < 200000; ++attempts) {
        const bool ellipse = (rng() & 1u) != 0;
        const int bw = draw(2, max_rw);
        const int bh = draw(2, max_rh);
        const int top = draw(0, img.height - 1) - bh / 2;
        const int left = draw(0, img.width - 1) - bw / 2;
        const std::int64_t cy2 = bh;  // ellipse axes in half-pixel units
        const std::int64_t cx2 = bw;
        for (int rr = std::max(0, top); rr < std::min(img.height, top + bh); ++rr) {
            for (int cc = std::max(0, left); cc < std::min(img.width, left + bw); ++cc) {
                if (ellipse) {
                    const std::int64_t dy = 2 * (rr - top) - (bh - 1);
                    const std::int64_t dx = 2 * (cc - left) - (bw - 1);
                    if (dy * dy * cx2 * cx2 + dx * dx * cy2 * cy2 > cy2 * cy2 * cx2 * cx2) continue;
                }
                auto& px = img.at(rr, cc);
                if (!px) {
                    px = 1;
                    ++painted;
                }
            }
        }
    }
    return img;
}

BinaryImage make_max_labels(const PatternParams& p) {
    require(p.width > 0 && p.height > 0, "max_labels needs explicit width and height");
    require(p.count >= 1, "max_labels needs count >= 1");
    BinaryImage img = canvas(p, p.width, p.height);
    const int per_row = (img.width + 1) / 2;
    const int rows = (img.height + 1) / 2;
    require(p.count <= per_row * rows, "max_labels count exceeds canvas capacity");
    int placed = 0;
    for (int r = 0; r < img.height && placed < p.count; r += 2)
        for (int c = 0; c < img.width && placed < p.count; c += 2) {
            img.at(r, c) = 1;
            ++placed;
        }
    return img;
}

}  // namespace

BinaryImage gen_pattern(PatternKind kind, const PatternParams& params) {
    switch (kind) {
        case PatternKind::double_merger: return make_double_merger(params);
        case PatternKind::ascending_chain: return make_ascending_chain(params);
        case PatternKind::group_chain: return make_group_chain(params);
        case PatternKind::comb: return make_comb(params);
        case PatternKind::checkerboard_pairs: return make_checkerboard_pairs(params);
        case PatternKind::spiral: return make_spiral(params);
        case PatternKind::random: return make_random(params);
        case PatternKind::max_labels: return make_max_labels(params);
    }
    throw std::invalid_argument("unknown pattern kind");
}

std::optional<PatternKind> parse_pattern_kind(const std::string& name) {
    if (name == "double_merger") return PatternKind::double_merger;
    if (name == "ascending_chain") return PatternKind::ascending_chain;
    if (name == "group_chain") return PatternKind::group_chain;
    if (name == "comb") return PatternKind::comb;
    if (name == "checkerboard_pairs") return PatternKind::checkerboard_pairs;
    if (name == "spiral") return PatternKind::spiral;
    if (name == "random") return PatternKind::random;
    if (name == "max_labels") return PatternKind::max_labels;
    return std::nullopt;
}

const char* to_string(PatternKind kind) {
    switch (kind) {
        case PatternKind::double_merger: return "double_merger";
        case PatternKind::ascending_chain: return "ascending_chain";
        case PatternKind::group_chain: return "group_chain";
        case PatternKind::comb: return "comb";
        case PatternKind::checkerboard_pairs: return "checkerboard_pairs";
        case PatternKind::spiral: return "spiral";
        case PatternKind::random: return "random";
        case PatternKind::max_labels: return "max_labels";
    }
    return "?";
}

}  // namespace quadlabel
