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
 * Built-in experiments. Each one wires a data space and its group action
 * V, the Hilbert-space representation W, an embedding architecture, an
 * optional invariant unitary and an observable into a TrainingTask.
 *
 *   line2x2      3-qubit classifier for vertical/horizontal lines in 2×2
 *                images, exactly invariant under the 4-element image group
 *   c2           flip of 2×2 images, product RY embedding, X⊗X⊗Z⊗Z
 *   c2c2         vertical and horizontal flips, U_inv = Y⊗⁴, Z⊗⁴
 *   d4           symmetries of the square acting on the plane, RZ·RY
 *                embedding, U_inv = P₍₀₂₎₍₁₃₎·Y⊗⁴, Z⊗⁴
 *   s6           node relabelling of 6-node digraphs, graph CRY embedding,
 *                U_inv = Y⊗⁶, Z⊗⁶
 *   intertwiner  amplitude embedding followed by a trainable layered
 *                unitary, learning a map into W(Fv) = Z⊗I, W(Fh) = I⊗Z
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "equivar/circuits.hpp"
#include "equivar/groups.hpp"
#include "equivar/learner.hpp"
#include "equivar/random.hpp"

namespace equivar {

struct ExperimentOptions {
    /// Group for the intertwiner experiment: "c2" or "c2c2".
    std::string intertwiner_group{"c2"};
    std::size_t intertwiner_layers{2};
    /// Probability of each ordered pair (i, j) in s6 samples.
    double edge_probability{0.4};
};

struct ExperimentSpec {
    std::string name;
    std::string description;
    Representation w_rep;
    TrainingTask task;
    TrainConfig defaults;
    /// Trained on labels rather than the equivariance loss.
    bool classifier{false};

    [[nodiscard]] const CircuitSpec &circuit() const noexcept { return task.circuit; }
};

std::vector<std::string> list_experiments();

/// Throws ConfigError for an unknown name or bad options.
ExperimentSpec make_experiment(const std::string &name,
                               const ExperimentOptions &options = {});

enum class LineLabel { Vertical, Horizontal };

struct LineImage {
    std::vector<double> pixels; ///< row-major (a, b, c, d)
    LineLabel label;
};

/// Balanced labels; line pixels U[0.7, 1], background U[0, 0.3].
std::vector<LineImage> gen_line_images(std::size_t n, Rng &rng);

/// Noiseless template: the given column (vertical) or row (horizontal) lit.
std::vector<double> line_template(LineLabel label, std::size_t index);

/// Target +1 for vertical, −1 for horizontal.
std::vector<LabeledPoint> to_labeled(std::span<const LineImage> images);

/// Vertical iff the estimate is positive.
LineLabel predict_line(const CircuitSpec &spec, std::span<const double> theta,
                       const std::vector<double> &pixels);

double line_accuracy(const CircuitSpec &spec, std::span<const double> theta,
                     std::span<const LineImage> images);

GraphData random_digraph(Rng &rng, std::size_t nodes, double edge_probability);

std::vector<DataPoint> sample_data(const ExperimentSpec &spec, std::size_t n, Rng &rng);

/// Parity of the 3×3 cell containing p ∈ [−1.5, 1.5]²; throws outside.
int checkerboard_label(std::span<const double> p);

/// Equivariance training, or supervised training for classifiers (200
/// training images from the data stream, validation_size held out).
TrainRecord train(const TrainConfig &config, const ExperimentSpec &spec);

/// max − min of the estimate over the full group orbit of x.
double orbit_spread(const ExperimentSpec &spec, std::span<const double> theta,
                    const DataPoint &x, std::span<const GroupMember> elements);

/// Seed of the sample set used by invariance reports, fixed so reports
/// can be recomputed from a parameter file alone.
inline constexpr std::uint64_t kCheckSeed = 20240601;

struct InvarianceSummary {
    std::size_t samples{0};
    std::vector<double> generator_gap; ///< per generator, max over samples
    double max_generator_gap{0.0};
    double max_orbit_spread{0.0};
    std::optional<std::vector<double>> invariant_unitary_commutators;
    std::vector<double> observable_commutators;
};

InvarianceSummary invariance_summary(const ExperimentSpec &spec,
                                     std::span<const double> theta,
                                     std::size_t samples = 100,
                                     std::uint64_t seed = kCheckSeed);

} // namespace equivar
