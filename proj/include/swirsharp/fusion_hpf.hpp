#pragma once

#include "swirsharp/raster.hpp"

namespace swirsharp {

enum class HpfGain { Unit, StdMatch };

struct HpfConfig {
    int box_size = 5;  // odd, >= 3; 2 * ratio + 1 for the ratio-2 case
    HpfGain gain_mode = HpfGain::Unit;
};

/// Mean filter over a box_size x box_size window with clamp-to-edge borders.
BandGrid box_blur(const BandGrid& band, int box_size);

/// Classical high-pass-filter fusion: bicubic-upsampled SWIR plus the
/// guide's high-pass detail. Guide must be exactly twice the SWIR grid.
/// Gain is 1 in Unit mode; in StdMatch it is stdev(upsampled swir) /
/// stdev(high-pass guide), or 0 when the guide high-pass is constant.
BandGrid hpf_fuse(const BandGrid& swir, const BandGrid& guide, const HpfConfig& cfg = {});

}  // namespace swirsharp
