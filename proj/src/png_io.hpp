#pragma once

#include <cstdint>
#include <string>
#include <vector>

// Thin libpng wrappers. Internal to the library and its tests.

namespace swirsharp::pngio {

/// channels: 1 (gray) or 3 (rgb). data is row-major, 8 bits per sample.
void write_png8(const std::string& path, int width, int height, int channels,
                const std::vector<std::uint8_t>& data);

/// 1-bit grayscale; one byte per pixel on input, nonzero == white.
void write_png1(const std::string& path, int width, int height,
                const std::vector<std::uint8_t>& data);

struct PngImage {
    int width = 0;
    int height = 0;
    int channels = 0;
    std::vector<std::uint8_t> data;  // expanded to 8 bits per sample
};

PngImage read_png(const std::string& path);

}  // namespace swirsharp::pngio
