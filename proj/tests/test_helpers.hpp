#pragma once

#include <cstdint>
#include <random>

#include "quadlabel/types.hpp"

namespace quadlabel::testing {

/// Per-pixel Bernoulli noise; raw mt19937 draws keep it portable.
inline BinaryImage random_image(int width, int height, double density, std::uint32_t seed) {
    BinaryImage img = BinaryImage::zeros(width, height);
    std::mt19937 rng(seed);
    const auto threshold = static_cast<std::uint64_t>(density * 4294967296.0);
    for (auto& px : img.data) px = static_cast<std::uint8_t>(rng() < threshold);
    return img;
}

/// Image from rows of '.'/'#' text, for readable fixtures.
inline BinaryImage image_from_rows(const std::vector<std::string>& rows) {
    BinaryImage img = BinaryImage::zeros(static_cast<int>(rows.at(0).size()), static_cast<int>(rows.size()));
    for (int r = 0; r < img.height; ++r)
        for (int c = 0; c < img.width; ++c) img.at(r, c) = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] == '#';
    return img;
}

}  // namespace quadlabel::testing
