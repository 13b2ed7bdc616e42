#pragma once

#include "swirsharp/raster.hpp"

namespace swirsharp {

/// Integer resolution ratio (2 for the 20 m <-> 10 m case).
struct ScaleFactor {
    int ratio = 2;
};

/// Block mean over ratio x ratio cells; dimensions must be divisible.
/// Output gsd is multiplied by the ratio.
BandGrid downsample_box(const BandGrid& band, ScaleFactor factor);

/// Pixel replication into ratio x ratio blocks; gsd divided by the ratio.
BandGrid upsample_nearest(const BandGrid& band, ScaleFactor factor);

/// Separable cubic-convolution upsampling (a = -0.5, clamp-to-edge). Output
/// pixel centers of each ratio x ratio block sit symmetric around the source
/// pixel center. Requires at least a 2x2 input.
BandGrid upsample_bicubic(const BandGrid& band, ScaleFactor factor);

/// Nearest remap to an arbitrary grid by pixel-center mapping. Used for
/// putting mixed-resolution bands onto a common grid for visualization.
BandGrid resample_nearest_to(const BandGrid& band, int out_width, int out_height);

}  // namespace swirsharp
