#include "swirsharp/raster.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <limits>
#include <stdexcept>

#include "png_io.hpp"
#include "swirsharp/resample.hpp"

namespace swirsharp {

namespace {

constexpr char kMagic[4] = {'S', 'R', 'A', 'F'};
constexpr std::uint16_t kVersion = 1;

void put_u16(std::string& out, std::uint16_t v) {
    out.push_back(char(v & 0xFF));
    out.push_back(char(v >> 8));
}

void put_u32(std::string& out, std::uint32_t v) {
    for (int i = 0; i < 4; ++i) out.push_back(char((v >> (8 * i)) & 0xFF));
}

void put_f32(std::string& out, float v) { put_u32(out, std::bit_cast<std::uint32_t>(v)); }

class Reader {
public:
    Reader(const std::string& bytes, const std::string& path) : bytes_(bytes), path_(path) {}

    std::uint16_t u16() { return std::uint16_t(byte() | (std::uint16_t(byte()) << 8)); }

    std::uint32_t u32() {
        std::uint32_t v = 0;
        for (int i = 0; i < 4; ++i) v |= std::uint32_t(byte()) << (8 * i);
        return v;
    }

    float f32() { return std::bit_cast<float>(u32()); }

    std::uint8_t byte() {
        if (pos_ >= bytes_.size())
            throw std::runtime_error("truncated SRAF file: " + path_);
        return std::uint8_t(bytes_[pos_++]);
    }

    std::string str(std::size_t n) {
        if (pos_ + n > bytes_.size())
            throw std::runtime_error("truncated SRAF file: " + path_);
        std::string s = bytes_.substr(pos_, n);
        pos_ += n;
        return s;
    }

    bool exhausted() const { return pos_ == bytes_.size(); }

private:
    const std::string& bytes_;
    std::string path_;
    std::size_t pos_ = 0;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open: " + path);
    std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return bytes;
}

void write_file(const std::string& path, const std::string& bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out.write(bytes.data(), std::streamsize(bytes.size()));
    if (!out) throw std::runtime_error("write failed: " + path);
}

std::string format_gsd(double gsd) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", gsd);
    return buf;
}

/// "dir/scene.sraf" + 10 -> "dir/scene_10m.sraf"
std::string suffix_path(const std::string& path, double gsd) {
    const std::string tag = "_" + format_gsd(gsd) + "m";
    const std::size_t slash = path.find_last_of('/');
    const std::size_t dot = path.find_last_of('.');
    if (dot == std::string::npos || (slash != std::string::npos && dot < slash))
        return path + tag;
    return path.substr(0, dot) + tag + path.substr(dot);
}

}  // namespace

void validate_band(const BandGrid& band, bool require_nonneg) {
    if (band.width <= 0 || band.height <= 0)
        throw std::invalid_argument("band '" + band.name + "': non-positive dimensions");
    if (!(band.gsd_m > 0.0) || !std::isfinite(band.gsd_m))
        throw std::invalid_argument("band '" + band.name + "': gsd must be positive");
    if (band.values.size() != band.pixel_count())
        throw std::invalid_argument("band '" + band.name + "': value count does not match dimensions");
    for (float v : band.values) {
        if (!std::isfinite(v))
            throw std::invalid_argument("band '" + band.name + "': non-finite value");
        if (require_nonneg && v < 0.0f)
            throw std::invalid_argument("band '" + band.name + "': negative reflectance");
    }
}

const BandGrid& Scene::band(const std::string& name) const {
    auto it = bands.find(name);
    if (it == bands.end()) throw std::invalid_argument("scene is missing band '" + name + "'");
    return it->second;
}

void Scene::add(BandGrid band) {
    const std::string key = band.name;
    bands[key] = std::move(band);
}

void validate_scene(const Scene& scene) {
    if (scene.bands.empty()) throw std::invalid_argument("scene has no bands");
    double min_gsd = std::numeric_limits<double>::infinity();
    for (const auto& [name, band] : scene.bands) {
        validate_band(band);
        if (name != band.name)
            throw std::invalid_argument("scene key '" + name + "' does not match band name");
        min_gsd = std::min(min_gsd, band.gsd_m);
    }
    const BandGrid& first = scene.bands.begin()->second;
    const double fw = first.width * first.gsd_m;
    const double fh = first.height * first.gsd_m;
    for (const auto& [name, band] : scene.bands) {
        for (const auto& [other_name, other] : scene.bands) {
            if (band.gsd_m == other.gsd_m &&
                (band.width != other.width || band.height != other.height))
                throw std::invalid_argument("bands '" + name + "' and '" + other_name +
                                            "' share a gsd but differ in shape");
        }
        if (std::abs(band.width * band.gsd_m - fw) > 0.5 * min_gsd ||
            std::abs(band.height * band.gsd_m - fh) > 0.5 * min_gsd)
            throw std::invalid_argument("band '" + name + "' does not cover the scene footprint");
    }
}

BandGrid import_raw(const std::string& path, int width, int height, RawDtype dtype,
                    double scale_divisor, const std::string& name, double gsd_m) {
    if (!(scale_divisor > 0.0) || !std::isfinite(scale_divisor))
        throw std::invalid_argument("import_raw: scale divisor must be positive");
    if (width <= 0 || height <= 0) throw std::invalid_argument("import_raw: bad dimensions");

    const std::string bytes = read_file(path);
    const std::size_t sample_size = dtype == RawDtype::U16 ? 2 : 4;
    const std::size_t expected = std::size_t(width) * height * sample_size;
    if (bytes.size() != expected)
        throw std::runtime_error("import_raw: " + path + " holds " + std::to_string(bytes.size()) +
                                 " bytes, expected " + std::to_string(expected));

    BandGrid band;
    band.name = name;
    band.width = width;
    band.height = height;
    band.gsd_m = gsd_m;
    band.values.resize(band.pixel_count());

    Reader r(bytes, path);
    for (std::size_t i = 0; i < band.values.size(); ++i) {
        const double raw = dtype == RawDtype::U16 ? double(r.u16()) : double(r.f32());
        band.values[i] = float(raw / scale_divisor);
    }
    validate_band(band, /*require_nonneg=*/true);
    return band;
}

void save_sraf_single(const Scene& scene, const std::string& path) {
    validate_scene(scene);
    const BandGrid& first = scene.bands.begin()->second;
    for (const auto& [name, band] : scene.bands) {
        if (band.gsd_m != first.gsd_m)
            throw std::invalid_argument("save_sraf_single: bands at mixed gsd");
        if (name.empty() || name.size() > 255)
            throw std::invalid_argument("save_sraf_single: band name length out of range");
    }

    std::string out;
    out.append(kMagic, 4);
    put_u16(out, kVersion);
    put_u16(out, std::uint16_t(scene.bands.size()));
    put_u32(out, std::uint32_t(first.width));
    put_u32(out, std::uint32_t(first.height));
    put_f32(out, float(first.gsd_m));
    for (const auto& [name, band] : scene.bands) {
        out.push_back(char(std::uint8_t(name.size())));
        out.append(name);
    }
    for (const auto& [name, band] : scene.bands)
        for (float v : band.values) put_f32(out, v);
    write_file(path, out);
}

std::vector<std::string> save_sraf(const Scene& scene, const std::string& path) {
    validate_scene(scene);
    std::vector<double> gsds;
    for (const auto& [name, band] : scene.bands)
        if (std::find(gsds.begin(), gsds.end(), band.gsd_m) == gsds.end())
            gsds.push_back(band.gsd_m);

    std::vector<std::string> written;
    if (gsds.size() == 1) {
        save_sraf_single(scene, path);
        written.push_back(path);
        return written;
    }
    std::sort(gsds.begin(), gsds.end());
    for (double gsd : gsds) {
        Scene group;
        group.acquisition_label = scene.acquisition_label;
        for (const auto& [name, band] : scene.bands)
            if (band.gsd_m == gsd) group.bands.emplace(name, band);
        const std::string group_path = suffix_path(path, gsd);
        save_sraf_single(group, group_path);
        written.push_back(group_path);
    }
    return written;
}

Scene load_sraf(const std::string& path) {
    const std::string bytes = read_file(path);
    if (bytes.size() < 4 || std::memcmp(bytes.data(), kMagic, 4) != 0)
        throw std::runtime_error("not an SRAF file (bad magic): " + path);

    Reader r(bytes, path);
    r.str(4);  // magic
    const std::uint16_t version = r.u16();
    if (version != kVersion)
        throw std::runtime_error("unsupported SRAF version " + std::to_string(version) + ": " + path);
    const std::uint16_t band_count = r.u16();
    if (band_count == 0) throw std::runtime_error("SRAF file declares zero bands: " + path);
    const std::uint32_t width = r.u32();
    const std::uint32_t height = r.u32();
    const float gsd = r.f32();

    std::vector<std::string> names;
    for (int b = 0; b < band_count; ++b) {
        const std::size_t len = r.byte();
        names.push_back(r.str(len));
    }

    Scene scene;
    for (const std::string& name : names) {
        BandGrid band;
        band.name = name;
        band.width = int(width);
        band.height = int(height);
        band.gsd_m = double(gsd);
        band.values.resize(band.pixel_count());
        for (float& v : band.values) {
            v = r.f32();
            if (std::isnan(v)) throw std::runtime_error("NaN in SRAF payload: " + path);
        }
        if (scene.has(name)) throw std::runtime_error("duplicate band '" + name + "' in " + path);
        scene.add(std::move(band));
    }
    if (!r.exhausted()) throw std::runtime_error("trailing bytes after SRAF payload: " + path);
    validate_scene(scene);
    return scene;
}

void export_png(const std::vector<const BandGrid*>& bands, const std::string& path,
                const StretchSpec& stretch) {
    if (bands.size() != 1 && bands.size() != 3)
        throw std::invalid_argument("export_png: expected 1 or 3 bands");
    for (const BandGrid* b : bands) {
        validate_band(*b);
        if (b->width != bands[0]->width || b->height != bands[0]->height ||
            b->gsd_m != bands[0]->gsd_m)
            throw std::invalid_argument("export_png: band shapes differ");
    }

    const int w = bands[0]->width, h = bands[0]->height;
    const int channels = int(bands.size());
    std::vector<std::uint8_t> pixels(std::size_t(w) * h * channels);
    for (int c = 0; c < channels; ++c) {
        double lo = stretch.lo, hi = stretch.hi;
        if (stretch.minmax) {
            const auto [mn, mx] = std::minmax_element(bands[c]->values.begin(), bands[c]->values.end());
            lo = *mn;
            hi = *mx;
        }
        if (!(hi > lo))
            throw std::invalid_argument("export_png: stretch range is empty (hi <= lo)");
        for (std::size_t i = 0; i < bands[c]->values.size(); ++i) {
            const double t = std::clamp((bands[c]->values[i] - lo) / (hi - lo), 0.0, 1.0);
            pixels[i * channels + c] = std::uint8_t(std::lround(255.0 * t));
        }
    }
    pngio::write_png8(path, w, h, channels, pixels);
}

std::array<BandGrid, 3> composite_false_color(const Scene& scene) {
    const BandGrid& b12 = scene.band("B12");
    const BandGrid& b11 = scene.band("B11");
    const BandGrid& b08 = scene.band("B08");
    const int w = b12.width, h = b12.height;
    auto on_grid = [&](const BandGrid& band) {
        if (band.width == w && band.height == h) return band;
        return resample_nearest_to(band, w, h);
    };
    return {on_grid(b12), on_grid(b11), on_grid(b08)};
}

}  // namespace swirsharp
