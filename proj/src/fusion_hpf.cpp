#include "swirsharp/fusion_hpf.hpp"

#include <cmath>
#include <stdexcept>

#include "swirsharp/resample.hpp"

namespace swirsharp {

namespace {

double stdev(const std::vector<double>& v) {
    const std::size_t n = v.size();
    if (n < 2) return 0.0;
    double mean = 0.0;
    for (double x : v) mean += x;
    mean /= double(n);
    double ss = 0.0;
    for (double x : v) ss += (x - mean) * (x - mean);
    return std::sqrt(ss / double(n - 1));
}

}  // namespace

BandGrid box_blur(const BandGrid& band, int box_size) {
    if (box_size < 3 || box_size % 2 == 0)
        throw std::invalid_argument("box_blur: box size must be odd and >= 3");
    validate_band(band);
    const int half = box_size / 2;
    const double count = double(box_size) * box_size;
    BandGrid out = band;
    for (int y = 0; y < band.height; ++y) {
        for (int x = 0; x < band.width; ++x) {
            double sum = 0.0;
            for (int dy = -half; dy <= half; ++dy) {
                const int sy = std::clamp(y + dy, 0, band.height - 1);
                for (int dx = -half; dx <= half; ++dx)
                    sum += band.at(sy, std::clamp(x + dx, 0, band.width - 1));
            }
            // Division keeps the mean of a constant window exactly constant.
            out.at(y, x) = float(sum / count);
        }
    }
    return out;
}

BandGrid hpf_fuse(const BandGrid& swir, const BandGrid& guide, const HpfConfig& cfg) {
    if (cfg.box_size < 3 || cfg.box_size % 2 == 0)
        throw std::invalid_argument("hpf_fuse: box size must be odd and >= 3");
    validate_band(swir);
    validate_band(guide);
    if (guide.width != 2 * swir.width || guide.height != 2 * swir.height)
        throw std::invalid_argument("hpf_fuse: guide must be exactly twice the SWIR grid");

    BandGrid up = upsample_bicubic(swir, ScaleFactor{2});
    const BandGrid blur = box_blur(guide, cfg.box_size);

    std::vector<double> highpass(guide.pixel_count());
    for (std::size_t i = 0; i < highpass.size(); ++i)
        highpass[i] = double(guide.values[i]) - double(blur.values[i]);

    double gain = 1.0;
    if (cfg.gain_mode == HpfGain::StdMatch) {
        const double hp_std = stdev(highpass);
        if (hp_std == 0.0) {
            gain = 0.0;
        } else {
            std::vector<double> up_vals(up.values.begin(), up.values.end());
            gain = stdev(up_vals) / hp_std;
        }
    }

    BandGrid out = up;
    out.name = swir.name + "_hpf";
    for (std::size_t i = 0; i < out.values.size(); ++i)
        out.values[i] = float(double(up.values[i]) + gain * highpass[i]);
    return out;
}

}  // namespace swirsharp
