#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace swirsharp {

/// One spectral band: a row-major grid of reflectance samples with a ground
/// sampling distance in meters. Bands imported from raw data are scaled
/// top-of-atmosphere reflectance and are finite and non-negative; derived
/// index bands (NDVI, band ratios) may carry signed values.
struct BandGrid {
    std::string name;
    int width = 0;
    int height = 0;
    double gsd_m = 0.0;
    std::vector<float> values;  // row-major, top-left origin

    float at(int y, int x) const { return values[std::size_t(y) * width + x]; }
    float& at(int y, int x) { return values[std::size_t(y) * width + x]; }
    std::size_t pixel_count() const { return std::size_t(width) * std::size_t(height); }
};

/// Checks dimensions, value-count, finiteness and positive gsd.
/// With require_nonneg also enforces the reflectance range.
void validate_band(const BandGrid& band, bool require_nonneg = false);

/// A named collection of bands at possibly mixed resolutions covering one
/// ground footprint. Treated as immutable once assembled.
struct Scene {
    std::map<std::string, BandGrid> bands;
    std::string acquisition_label;

    bool has(const std::string& name) const { return bands.count(name) != 0; }
    const BandGrid& band(const std::string& name) const;  // throws if absent
    void add(BandGrid band);                              // keyed by band.name
};

/// Bands sharing a gsd must share dimensions; all bands must cover the same
/// ground footprint within half the finest gsd.
void validate_scene(const Scene& scene);

enum class RawDtype { U16, F32 };

/// Reads little-endian row-major samples and divides by scale_divisor.
BandGrid import_raw(const std::string& path, int width, int height, RawDtype dtype,
                    double scale_divisor, const std::string& name, double gsd_m);

/// Serializes a scene to SRAF. Bands are grouped by gsd; a single group is
/// written to `path` verbatim, several groups to `path` with a "_<gsd>m"
/// suffix each. Returns the paths written.
std::vector<std::string> save_sraf(const Scene& scene, const std::string& path);

/// Writes one SRAF file; every band must share one gsd.
void save_sraf_single(const Scene& scene, const std::string& path);

/// Inverse of save_sraf_single. The acquisition label is not part of the
/// format and comes back empty.
Scene load_sraf(const std::string& path);

struct StretchSpec {
    bool minmax = true;
    double lo = 0.0;
    double hi = 1.0;

    static StretchSpec fixed(double lo, double hi) { return StretchSpec{false, lo, hi}; }
};

/// Writes an 8-bit grayscale (1 band) or RGB (3 bands, in order) PNG.
/// pixel = round(255 * clamp((v - lo) / (hi - lo), 0, 1)).
void export_png(const std::vector<const BandGrid*>& bands, const std::string& path,
                const StretchSpec& stretch);

/// (B12, B11, B08) on a common grid for false-colour export; bands that do
/// not match the B12 grid are nearest-resampled onto it.
std::array<BandGrid, 3> composite_false_color(const Scene& scene);

}  // namespace swirsharp
