#pragma once

#include <cctype>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "annot/error.hpp"

namespace annot {

/// 8-bit grayscale image, row-major, origin at the top-left pixel.
struct GrayImage {
    std::size_t width = 0;
    std::size_t height = 0;
    std::vector<std::uint8_t> pixels;

    std::uint8_t at(std::size_t x, std::size_t y) const { return pixels[y * width + x]; }
    std::uint8_t& at(std::size_t x, std::size_t y) { return pixels[y * width + x]; }
};

namespace detail {

// Skips whitespace and '#' comment lines between PGM header tokens.
inline void skip_pgm_separators(std::istream& in) {
    for (;;) {
        int c = in.peek();
        if (c == '#') {
            std::string line;
            std::getline(in, line);
        } else if (c != EOF && std::isspace(static_cast<unsigned char>(c))) {
            in.get();
        } else {
            return;
        }
    }
}

inline long read_pgm_number(std::istream& in, const char* what) {
    skip_pgm_separators(in);
    long value = 0;
    if (!(in >> value)) throw ParseError(std::string("pgm: missing or malformed ") + what);
    return value;
}

} // namespace detail

/// Decodes a PGM image (binary P5 or ASCII P2, maxval <= 255) from a stream.
inline GrayImage parse_pgm(std::istream& in) {
    std::string magic;
    in >> magic;
    if (magic != "P2" && magic != "P5")
        throw ParseError("pgm: unsupported format \"" + magic + "\" (want P2 or P5)");

    const long w = detail::read_pgm_number(in, "width");
    const long h = detail::read_pgm_number(in, "height");
    const long maxval = detail::read_pgm_number(in, "maxval");
    if (w <= 0 || h <= 0) throw ParseError("pgm: non-positive dimensions");
    if (maxval <= 0 || maxval > 255)
        throw ParseError("pgm: maxval " + std::to_string(maxval) + " out of range (1..255)");

    GrayImage img;
    img.width = static_cast<std::size_t>(w);
    img.height = static_cast<std::size_t>(h);
    const std::size_t count = img.width * img.height;
    img.pixels.resize(count);

    if (magic == "P5") {
        in.get(); // single whitespace byte after maxval
        in.read(reinterpret_cast<char*>(img.pixels.data()), static_cast<std::streamsize>(count));
        if (static_cast<std::size_t>(in.gcount()) != count)
            throw TruncatedError("pgm: truncated pixel data (want " + std::to_string(count) +
                                 " bytes, got " + std::to_string(in.gcount()) + ")");
    } else {
        for (std::size_t i = 0; i < count; ++i) {
            detail::skip_pgm_separators(in);
            long v = 0;
            if (!(in >> v))
                throw TruncatedError("pgm: truncated pixel data (want " + std::to_string(count) +
                                     " values, got " + std::to_string(i) + ")");
            if (v < 0 || v > maxval)
                throw ParseError("pgm: pixel value " + std::to_string(v) + " exceeds maxval");
            img.pixels[i] = static_cast<std::uint8_t>(v);
        }
    }
    return img;
}

inline GrayImage load_pgm(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    try {
        return parse_pgm(in);
    } catch (const ParseError& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
}

/// Writes binary P5. Used by the corpus tooling and the test-suite generators.
inline void write_pgm(const GrayImage& img, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path.string());
    out << "P5\n" << img.width << " " << img.height << "\n255\n";
    out.write(reinterpret_cast<const char*>(img.pixels.data()),
              static_cast<std::streamsize>(img.pixels.size()));
    if (!out) throw IoError("short write to " + path.string());
}

} // namespace annot
