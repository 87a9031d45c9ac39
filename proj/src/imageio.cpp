#include "quadlabel/imageio.hpp"

#include <cctype>
#include <fstream>
#include <stdexcept>

namespace quadlabel {
namespace {

// Skips whitespace and '#' comments between header tokens.
int next_header_int(std::istream& in, const std::string& what) {
    for (;;) {
        int c = in.peek();
        if (c == EOF) throw std::runtime_error("unexpected end of file reading " + what);
        if (std::isspace(c)) {
            in.get();
            continue;
        }
        if (c == '#') {
            std::string line;
            std::getline(in, line);
            continue;
        }
        break;
    }
    int value = 0;
    if (!(in >> value) || value < 0) throw std::runtime_error("malformed value for " + what);
    return value;
}

}  // namespace

BinaryImage read_pbm(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    char p = 0, kind = 0;
    in.get(p);
    in.get(kind);
    if (p != 'P' || (kind != '1' && kind != '4')) throw std::runtime_error(path + ": not a PBM file");

    const int w = next_header_int(in, "width");
    const int h = next_header_int(in, "height");
    if (w <= 0 || h <= 0 || static_cast<long long>(w) * h > (1LL << 31))
        throw std::runtime_error(path + ": unreasonable dimensions");
    BinaryImage img = BinaryImage::zeros(w, h);

    if (kind == '1') {
        for (int r = 0; r < h; ++r) {
            for (int c = 0; c < w; ++c) {
                int ch = in.get();
                while (ch != EOF && ch != '0' && ch != '1') {
                    if (ch == '#') {
                        std::string line;
                        std::getline(in, line);
                    }
                    ch = in.get();
                }
                if (ch == EOF) throw std::runtime_error(path + ": truncated P1 data");
                img.at(r, c) = static_cast<std::uint8_t>(ch - '0');
            }
        }
    } else {
        in.get();  // single whitespace after the header
        const int row_bytes = (w + 7) / 8;
        std::vector<char> row(static_cast<std::size_t>(row_bytes));
        for (int r = 0; r < h; ++r) {
            if (!in.read(row.data(), row_bytes)) throw std::runtime_error(path + ": truncated P4 data");
            for (int c = 0; c < w; ++c) {
                const auto byte = static_cast<unsigned char>(row[static_cast<std::size_t>(c / 8)]);
                img.at(r, c) = (byte >> (7 - c % 8)) & 1u;
            }
        }
    }
    return img;
}

void write_pbm(const std::string& path, const BinaryImage& img) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << "P4\n" << img.width << " " << img.height << "\n";
    const int row_bytes = (img.width + 7) / 8;
    std::vector<char> row(static_cast<std::size_t>(row_bytes));
    for (int r = 0; r < img.height; ++r) {
        std::fill(row.begin(), row.end(), 0);
        for (int c = 0; c < img.width; ++c)
            if (img.at(r, c)) row[static_cast<std::size_t>(c / 8)] |= static_cast<char>(0x80 >> (c % 8));
        out.write(row.data(), row_bytes);
    }
    if (!out) throw std::runtime_error("write failed for " + path);
}

void write_pgm16(const std::string& path, const LabelImage& img) {
    for (Label l : img.data)
        if (l > 65535) throw std::runtime_error("label " + std::to_string(l) + " exceeds 16-bit PGM range");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << "P5\n" << img.width << " " << img.height << "\n65535\n";
    for (Label l : img.data) {
        out.put(static_cast<char>((l >> 8) & 0xff));
        out.put(static_cast<char>(l & 0xff));
    }
    if (!out) throw std::runtime_error("write failed for " + path);
}

LabelImage read_pgm16(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    char p = 0, kind = 0;
    in.get(p);
    in.get(kind);
    if (p != 'P' || kind != '5') throw std::runtime_error(path + ": not a P5 PGM file");
    const int w = next_header_int(in, "width");
    const int h = next_header_int(in, "height");
    const int maxval = next_header_int(in, "maxval");
    if (maxval != 65535) throw std::runtime_error(path + ": expected 16-bit PGM");
    in.get();
    LabelImage img = LabelImage::zeros(w, h);
    for (auto& l : img.data) {
        const int hi = in.get();
        const int lo = in.get();
        if (lo == EOF) throw std::runtime_error(path + ": truncated PGM data");
        l = static_cast<Label>((hi << 8) | lo);
    }
    return img;
}

void write_table_dump(const std::string& path, const EquivalenceTable& table) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    for (std::size_t a = 0; a < table.size(); ++a)
        out << a << " " << table.at(static_cast<Label>(a)) << "\n";
    if (!out) throw std::runtime_error("write failed for " + path);
}

}  // namespace quadlabel
