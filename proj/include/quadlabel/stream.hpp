#pragma once

#include <vector>

#include "quadlabel/types.hpp"

namespace quadlabel {

/// Splits an image into 4-pixel groups, row-major. sof on the first group,
/// eol on the last group of every row, all groups valid.
/// Throws std::invalid_argument if the image is malformed (width not a
/// multiple of 4, empty, or non-binary data).
std::vector<PixelGroup> pack_frame(const BinaryImage& img);

/// Reassembles a label image from a group stream. Throws std::invalid_argument
/// when the group count does not match width/4 * height.
LabelImage unpack_labels(const std::vector<LabelGroup>& groups, int width, int height);

}  // namespace quadlabel
