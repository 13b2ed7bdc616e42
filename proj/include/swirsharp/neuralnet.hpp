#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace swirsharp {

/// height x width x channels array, row-major with channels fastest.
struct Tensor3 {
    int height = 0;
    int width = 0;
    int channels = 0;
    std::vector<double> data;

    static Tensor3 zeros(int h, int w, int c) {
        Tensor3 t;
        t.height = h;
        t.width = w;
        t.channels = c;
        t.data.assign(std::size_t(h) * w * c, 0.0);
        return t;
    }

    double at(int y, int x, int c) const {
        return data[(std::size_t(y) * width + x) * channels + c];
    }
    double& at(int y, int x, int c) {
        return data[(std::size_t(y) * width + x) * channels + c];
    }
    std::size_t size() const { return data.size(); }
    bool same_shape(const Tensor3& o) const {
        return height == o.height && width == o.width && channels == o.channels;
    }
};

enum class Activation { Relu, Linear };

/// One convolutional layer: out_channels filters of in_channels x K x K,
/// zero same-padding, cross-correlation convention.
struct ConvLayerParams {
    int out_channels = 0;
    int in_channels = 0;
    int kernel = 0;
    Activation activation = Activation::Relu;
    // Stored tap-major for the inner compute loops:
    // index ((ky * K + kx) * in_channels + n) * out_channels + m.
    std::vector<double> kernels;
    std::vector<double> biases;  // out_channels

    double kernel_at(int m, int n, int ky, int kx) const {
        return kernels[(std::size_t(ky * kernel + kx) * in_channels + n) * out_channels + m];
    }
    double& kernel_at(int m, int n, int ky, int kx) {
        return kernels[(std::size_t(ky * kernel + kx) * in_channels + n) * out_channels + m];
    }
};

/// Network shape: three conv layers, relu/relu/linear. Input channels are
/// the SWIR bands followed by the guide bands; output channels the SWIR
/// bands. Hidden widths and kernel size are configurable.
struct ModelArch {
    std::array<int, 2> hidden_widths{48, 32};
    int kernel = 3;
    std::vector<std::string> swir_bands{"B11", "B12"};
    std::vector<std::string> guide_bands{"B08"};
    int ratio = 2;

    int input_channels() const { return int(swir_bands.size() + guide_bands.size()); }
    int output_channels() const { return int(swir_bands.size()); }
};

struct ModelParams {
    ModelArch arch;
    std::string provenance;
    std::vector<ConvLayerParams> layers;  // exactly 3
};

/// Throws if the three-layer structure or channel chaining is violated.
void validate_params(const ModelParams& params);

/// Container shaped like the trainable parameters (gradients, moments).
struct ParamTensors {
    struct LayerSlot {
        std::vector<double> kernels;
        std::vector<double> biases;
    };
    std::vector<LayerSlot> layers;

    static ParamTensors zeros_like(const ModelParams& params);
    void fill(double v);
    void scale(double s);
};

struct AdamState {
    long step_count = 0;
    double eta = 0.002;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double epsilon = 1e-8;
    ParamTensors m;
    ParamTensors v;

    static AdamState fresh(const ModelParams& params, double eta = 0.002, double beta1 = 0.9,
                           double beta2 = 0.999, double epsilon = 1e-8);
};

Tensor3 conv_forward(const Tensor3& input, const ConvLayerParams& layer);
Tensor3 model_forward(const Tensor3& input, const ModelParams& params);

struct L1Result {
    double loss = 0.0;
    Tensor3 grad;  // d loss / d output
};

/// Mean absolute error over all elements; gradient is sign(out - target)
/// divided by the element count, with sign(0) = 0.
L1Result l1_loss_and_grad(const Tensor3& output, const Tensor3& target);

/// Reverse-mode gradients of a scalar loss with the given d loss / d output.
ParamTensors model_backward(const Tensor3& input, const ModelParams& params,
                            const Tensor3& loss_grad);

/// One ADAM update, in place. Advances the step count even for zero grads.
void adam_step(ModelParams& params, const ParamTensors& grads, AdamState& state);

/// Fan-in-scaled uniform init: kernels in [-sqrt(6/(N*K^2)), +), zero biases.
ModelParams init_params(const ModelArch& arch, std::uint64_t seed);

/// Network that passes its first min(in, out) channels through unchanged.
/// Exact on non-negative inputs (relu is the identity there).
ModelParams make_delta_identity(const ModelArch& arch);

void save_params(const ModelParams& params, const std::string& path,
                 const AdamState* state = nullptr);

struct LoadedParams {
    ModelParams params;
    std::optional<AdamState> adam;
};

LoadedParams load_params(const std::string& path);

// Shared activation buffers for the training loop: acts[0] is the input,
// acts[3] the network output.
struct ForwardCache {
    std::array<Tensor3, 4> acts;
};

const Tensor3& model_forward_cached(const Tensor3& input, const ModelParams& params,
                                    ForwardCache& cache);

/// Accumulates this sample's parameter gradients into grads.
void model_backward_cached(const ModelParams& params, const ForwardCache& cache,
                           const Tensor3& loss_grad, ParamTensors& grads);

}  // namespace swirsharp
