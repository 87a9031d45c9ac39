#pragma once

#include <string>

#include "quadlabel/equivalence.hpp"
#include "quadlabel/types.hpp"

namespace quadlabel {

/// Reads plain (P1) or raw (P4) PBM. 1 = foreground. Throws std::runtime_error
/// on malformed input.
BinaryImage read_pbm(const std::string& path);

/// Writes raw (P4) PBM.
void write_pbm(const std::string& path, const BinaryImage& img);

/// Writes labels as 16-bit big-endian PGM (P5, maxval 65535). Labels above
/// 65535 are a range error.
void write_pgm16(const std::string& path, const LabelImage& img);

/// Reads a 16-bit PGM back into a label image (round-trip and comparison use).
LabelImage read_pgm16(const std::string& path);

/// Dumps an equivalence table as "address data" lines, ascending addresses.
void write_table_dump(const std::string& path, const EquivalenceTable& table);

}  // namespace quadlabel
