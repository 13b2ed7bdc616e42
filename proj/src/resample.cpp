#include "swirsharp/resample.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace swirsharp {

namespace {

void check_ratio(ScaleFactor factor) {
    if (factor.ratio < 1) throw std::invalid_argument("scale ratio must be >= 1");
}

/// Cubic convolution kernel, a = -0.5.
double cubic_weight(double t) {
    constexpr double a = -0.5;
    t = std::abs(t);
    if (t <= 1.0) return ((a + 2.0) * t - (a + 3.0)) * t * t + 1.0;
    if (t < 2.0) return a * (((t - 5.0) * t + 8.0) * t - 4.0);
    return 0.0;
}

struct Phase {
    int base_offset;               // tap base relative to x / ratio
    std::array<double, 4> w;       // weights for taps base-1 .. base+2
};

std::vector<Phase> bicubic_phases(int ratio) {
    std::vector<Phase> phases(ratio);
    for (int p = 0; p < ratio; ++p) {
        // Source coordinate of output pixel center: symmetric around the
        // source pixel center within each ratio-sized block.
        double offset = (p + 0.5) / ratio - 0.5;
        int base = 0;
        if (offset < 0.0) {
            base = -1;
            offset += 1.0;
        }
        phases[p].base_offset = base;
        phases[p].w = {cubic_weight(offset + 1.0), cubic_weight(offset),
                       cubic_weight(1.0 - offset), cubic_weight(2.0 - offset)};
    }
    return phases;
}

}  // namespace

BandGrid downsample_box(const BandGrid& band, ScaleFactor factor) {
    check_ratio(factor);
    validate_band(band);
    const int r = factor.ratio;
    if (band.width % r != 0 || band.height % r != 0)
        throw std::invalid_argument("downsample_box: dimensions of '" + band.name +
                                    "' not divisible by ratio " + std::to_string(r));

    BandGrid out;
    out.name = band.name;
    out.width = band.width / r;
    out.height = band.height / r;
    out.gsd_m = band.gsd_m * r;
    out.values.resize(out.pixel_count());
    const double block = double(r) * r;
    for (int y = 0; y < out.height; ++y) {
        for (int x = 0; x < out.width; ++x) {
            double sum = 0.0;
            for (int dy = 0; dy < r; ++dy)
                for (int dx = 0; dx < r; ++dx) sum += band.at(y * r + dy, x * r + dx);
            // Division (not reciprocal multiply) so block means of constants
            // stay exact.
            out.at(y, x) = float(sum / block);
        }
    }
    return out;
}

BandGrid upsample_nearest(const BandGrid& band, ScaleFactor factor) {
    check_ratio(factor);
    validate_band(band);
    const int r = factor.ratio;
    BandGrid out;
    out.name = band.name;
    out.width = band.width * r;
    out.height = band.height * r;
    out.gsd_m = band.gsd_m / r;
    out.values.resize(out.pixel_count());
    for (int y = 0; y < out.height; ++y)
        for (int x = 0; x < out.width; ++x) out.at(y, x) = band.at(y / r, x / r);
    return out;
}

BandGrid upsample_bicubic(const BandGrid& band, ScaleFactor factor) {
    check_ratio(factor);
    validate_band(band);
    if (band.width < 2 || band.height < 2)
        throw std::invalid_argument("upsample_bicubic: input '" + band.name +
                                    "' is degenerate (need at least 2x2)");

    const int r = factor.ratio;
    const auto phases = bicubic_phases(r);
    const int out_w = band.width * r;
    const int out_h = band.height * r;

    // Horizontal pass into a double buffer, then vertical.
    std::vector<double> mid(std::size_t(band.height) * out_w);
    for (int y = 0; y < band.height; ++y) {
        const float* row = band.values.data() + std::size_t(y) * band.width;
        for (int x = 0; x < out_w; ++x) {
            const Phase& ph = phases[x % r];
            const int base = x / r + ph.base_offset;
            double acc = 0.0;
            for (int k = 0; k < 4; ++k) {
                const int src = std::clamp(base - 1 + k, 0, band.width - 1);
                acc += ph.w[k] * row[src];
            }
            mid[std::size_t(y) * out_w + x] = acc;
        }
    }

    BandGrid out;
    out.name = band.name;
    out.width = out_w;
    out.height = out_h;
    out.gsd_m = band.gsd_m / r;
    out.values.resize(out.pixel_count());
    for (int y = 0; y < out_h; ++y) {
        const Phase& ph = phases[y % r];
        const int base = y / r + ph.base_offset;
        int src[4];
        for (int k = 0; k < 4; ++k) src[k] = std::clamp(base - 1 + k, 0, band.height - 1);
        for (int x = 0; x < out_w; ++x) {
            double acc = 0.0;
            for (int k = 0; k < 4; ++k) acc += ph.w[k] * mid[std::size_t(src[k]) * out_w + x];
            out.at(y, x) = float(acc);
        }
    }
    return out;
}

BandGrid resample_nearest_to(const BandGrid& band, int out_width, int out_height) {
    validate_band(band);
    if (out_width <= 0 || out_height <= 0)
        throw std::invalid_argument("resample_nearest_to: bad output dimensions");
    BandGrid out;
    out.name = band.name;
    out.width = out_width;
    out.height = out_height;
    out.gsd_m = band.gsd_m * band.width / out_width;
    out.values.resize(out.pixel_count());
    for (int y = 0; y < out_height; ++y) {
        const int sy = std::min<int>(int((std::int64_t(2 * y + 1) * band.height) / (2 * out_height)),
                                     band.height - 1);
        for (int x = 0; x < out_width; ++x) {
            const int sx = std::min<int>(int((std::int64_t(2 * x + 1) * band.width) / (2 * out_width)),
                                         band.width - 1);
            out.at(y, x) = band.at(sy, sx);
        }
    }
    return out;
}

}  // namespace swirsharp
