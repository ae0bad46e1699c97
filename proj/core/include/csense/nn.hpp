#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "csense/rng.hpp"

namespace csense {

// Output transform of the last layer.
enum class Head { Softmax, Sigmoid, Identity };

// Row-major dense matrix; just enough surface for the MLP below.
struct Matrix {
    int rows = 0;
    int cols = 0;
    std::vector<double> data;

    Matrix() = default;
    Matrix(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r) * c, 0.0) {}

    double& at(int r, int c) { return data[static_cast<std::size_t>(r) * cols + c]; }
    double at(int r, int c) const { return data[static_cast<std::size_t>(r) * cols + c]; }
};

struct Layer {
    Matrix w;  // out x in
    std::vector<double> b;
};

// Fully connected net with ReLU between layers and the head applied last.
struct MlpNet {
    std::vector<Layer> layers;
    Head head = Head::Identity;

    int input_dim() const { return layers.empty() ? 0 : layers.front().w.cols; }
    int output_dim() const { return layers.empty() ? 0 : layers.back().w.rows; }
    std::size_t parameter_count() const;
};

// dims = {in, hidden..., out}. Weights drawn uniform(-1/sqrt(fan_in), +1/sqrt(fan_in)),
// biases zero.
MlpNet make_mlp(const std::vector<int>& dims, Head head, RngStream& rng);

struct ForwardCache {
    std::vector<std::vector<double>> inputs;  // input vector seen by each layer
    std::vector<double> output;               // after the head
};

// Evaluates the net; fills the cache when given one.
std::vector<double> forward(const MlpNet& net, std::span<const double> x,
                            ForwardCache* cache = nullptr);

// Parameter gradients shaped like the net.
struct Gradients {
    std::vector<Matrix> w;
    std::vector<std::vector<double>> b;

    void scale(double factor);
};

Gradients zero_gradients(const MlpNet& net);

// Gradient of dot(output, output_grad) with respect to every parameter,
// with the head Jacobian folded in.
Gradients backward(const MlpNet& net, const ForwardCache& cache,
                   std::span<const double> output_grad);

// Adam moments and hyperparameters for one net.
struct AdamState {
    double learning_rate = 1e-3;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double epsilon = 1e-8;
    std::int64_t step = 0;
    Gradients m;
    Gradients v;
};

AdamState make_adam(const MlpNet& net, double learning_rate);

// One bias-corrected Adam update. ascend=true adds the step (gradient ascent
// for policy objectives), ascend=false subtracts it (loss descent).
void adam_step(MlpNet& net, const Gradients& grads, AdamState& opt, bool ascend);

}  // namespace csense
