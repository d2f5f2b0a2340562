// Copyright 2026 The equivar Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * Equivariance training. The loss for a generator g and data point x is
 *
 *     L_g(x) = (h_θ(V(g)x) − h_θ(x))²,
 *
 * averaged over a batch of (g, x) pairs and minimised by plain gradient
 * descent on SPSA gradient estimates.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "equivar/circuits.hpp"
#include "equivar/data.hpp"
#include "equivar/groups.hpp"
#include "equivar/random.hpp"

namespace equivar {

/// Invalid configuration (maps to CLI exit code 2).
class ConfigError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Non-finite loss or estimate during training (CLI exit code 3).
class NumericalError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct SpsaSettings {
    double c0{1e-5};
    double gamma{0.101};

    /// c_k = c0 / (k + 1)^γ
    [[nodiscard]] double perturbation(std::size_t k) const;
};

struct TrainConfig {
    std::size_t epochs{150};
    std::size_t batch_size{100};
    double learning_rate{0.1};
    SpsaSettings spsa;
    /// Pairs per SPSA update; batch_size / minibatch updates per epoch.
    std::size_t minibatch{1};
    std::size_t validation_size{100};
    /// Draw one data point per run and reuse it for every batch element.
    bool fixed_data{false};
    std::uint64_t seed{0};
    std::string experiment;

    /// Throws ConfigError on any violated invariant.
    void validate() const;
};

/// Data-space action of a single named generator.
using DataAction = std::function<DataPoint(const std::string &generator, const DataPoint &x)>;
using DataSampler = std::function<DataPoint(Rng &rng)>;

/// Everything the trainer needs besides the configuration.
struct TrainingTask {
    CircuitSpec circuit;
    std::vector<std::string> generators;
    DataAction action;
    DataSampler sampler;
};

struct LossSample {
    GroupElement g;
    DataPoint x;
};

/// Applies the word right to left: V(g₁g₂)x = V(g₁)(V(g₂)x).
DataPoint act(const DataAction &action, const GroupElement &g, const DataPoint &x);

double equivariance_loss(const CircuitSpec &spec, std::span<const double> theta,
                         const GroupElement &g, const DataPoint &x,
                         const DataAction &action);

/// Mean of equivariance_loss over the batch; throws on an empty batch.
double batch_loss(const CircuitSpec &spec, std::span<const double> theta,
                  std::span<const LossSample> batch, const DataAction &action);

using ScalarObjective = std::function<double(std::span<const double>)>;

struct SpsaEstimate {
    std::vector<double> gradient;
    double loss_plus{0.0};
    double loss_minus{0.0};
};

/// Two-sided SPSA estimate with a Rademacher perturbation; exactly two
/// objective evaluations.
SpsaEstimate spsa_estimate(const ScalarObjective &objective,
                           std::span<const double> theta, std::size_t k,
                           const SpsaSettings &settings, Rng &rng);

std::vector<double> spsa_gradient(const CircuitSpec &spec, std::span<const double> theta,
                                  std::span<const LossSample> batch, std::size_t k,
                                  Rng &rng, const DataAction &action,
                                  const SpsaSettings &settings = {});

struct TrainRecord {
    TrainConfig config;
    std::vector<double> initial_params;
    double initial_val_loss{0.0};
    std::vector<double> train_loss;
    std::vector<double> val_loss;
    std::vector<std::vector<double>> params;
    std::vector<double> epoch_seconds;
    std::vector<double> final_params;
};

/// Fixed validation set: generators round-robin, data from the validation
/// stream.
std::vector<LossSample> validation_set(const TrainingTask &task, std::size_t n,
                                       std::uint64_t seed);

std::vector<double> initial_parameters(std::size_t count, std::uint64_t seed);

/**
 * θ₀ ~ U[0, 2π)^p. Each epoch draws batch_size fresh (generator, x) pairs
 * and takes one SPSA step per minibatch of them. Deterministic in the seed.
 * Throws NumericalError on a non-finite loss.
 */
TrainRecord train(const TrainConfig &config, const TrainingTask &task);

/// max over generators and points of |h(V(g)x) − h(x)|.
double invariance_gap(const CircuitSpec &spec, std::span<const double> theta,
                      const std::vector<std::string> &generators,
                      std::span<const DataPoint> points, const DataAction &action);

struct LabeledPoint {
    DataPoint x;
    double target{0.0};
};

/// Mean squared error between estimate and target.
double mse_loss(const CircuitSpec &spec, std::span<const double> theta,
                std::span<const LabeledPoint> batch);

/**
 * Supervised variant used by the line classifier: same SPSA loop on the
 * mean squared error. The data and validation sets are supplied by the
 * caller; each epoch visits the training set in a freshly shuffled order.
 */
TrainRecord train_classifier(const TrainConfig &config, const CircuitSpec &spec,
                             std::span<const LabeledPoint> train_set,
                             std::span<const LabeledPoint> validation);

} // namespace equivar
