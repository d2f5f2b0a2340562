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

#include "equivar/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <utility>

namespace equivar {

namespace {

using Cycles = std::vector<std::vector<std::size_t>>;

// 2×2 image symmetries on the flattened (a, b, c, d) vector.
std::vector<double> flip_vertical_axis(const std::vector<double> &v) {
    return {v[1], v[0], v[3], v[2]};
}

std::vector<double> flip_horizontal_axis(const std::vector<double> &v) {
    return {v[2], v[3], v[0], v[1]};
}

std::vector<double> half_turn(const std::vector<double> &v) {
    return {v[3], v[2], v[1], v[0]};
}

std::vector<double> checked_image(const DataPoint &x) {
    const auto &v = features(x);
    if (v.size() != 4) {
        throw std::invalid_argument("image action: expected a 4-vector");
    }
    return v;
}

DataAction image_action() {
    return [](const std::string &g, const DataPoint &x) -> DataPoint {
        const auto v = checked_image(x);
        if (g == "Fv") {
            return flip_vertical_axis(v);
        }
        if (g == "Fh") {
            return flip_horizontal_axis(v);
        }
        throw std::invalid_argument("image action: unknown generator " + g);
    };
}

DataSampler image_sampler() {
    return [](Rng &rng) -> DataPoint {
        return std::move(gen_line_images(1, rng).front().pixels);
    };
}

Representation image_flip_rep(bool both) {
    std::map<std::string, Permutation> images{
        {"Fv", Permutation::from_cycles(4, Cycles{{0, 1}, {2, 3}})}};
    std::vector<std::string> gens{"Fv"};
    if (both) {
        images.emplace("Fh", Permutation::from_cycles(4, Cycles{{0, 2}, {1, 3}}));
        gens.push_back("Fh");
    }
    return Representation::from_qubit_permutations(
        GroupPresentation{both ? "c2c2" : "c2", gens, both ? 4u : 2u}, 4, images);
}

ExperimentSpec make_line2x2() {
    Representation rep = line_classifier_rep();
    TrainConfig defaults;
    // Per-image steps on a squared error are too noisy at this learning rate.
    defaults.minibatch = 10;
    DataAction action = [](const std::string &g, const DataPoint &x) -> DataPoint {
        const auto v = checked_image(x);
        if (g == "rot") {
            return half_turn(v);
        }
        if (g == "flip") {
            return flip_vertical_axis(v);
        }
        throw std::invalid_argument("line2x2 action: unknown generator " + g);
    };
    return {"line2x2",
            "vertical/horizontal line classifier on 2x2 images, 3 qubits",
            rep,
            TrainingTask{line_classifier_circuit(), rep.group().generators,
                         std::move(action), image_sampler()},
            defaults,
            true};
}

ExperimentSpec make_c2() {
    Representation rep = image_flip_rep(false);
    CircuitSpec circuit = make_circuit(4, EmbeddingArch::product_ry(4), {}, std::nullopt,
                                       PauliObservable("XXZZ"), rep);
    return {"c2",
            "flip of 2x2 images, product RY embedding, observable XXZZ",
            rep,
            TrainingTask{std::move(circuit), rep.group().generators, image_action(),
                         image_sampler()},
            TrainConfig{},
            false};
}

ExperimentSpec make_c2c2() {
    Representation rep = image_flip_rep(true);
    CircuitSpec circuit =
        make_circuit(4, EmbeddingArch::product_ry(4), {},
                     gates::tensor_power(gates::Y(), 4), PauliObservable("ZZZZ"), rep);
    return {"c2c2",
            "vertical and horizontal flips of 2x2 images, U_inv = YYYY, observable ZZZZ",
            rep,
            TrainingTask{std::move(circuit), rep.group().generators, image_action(),
                         image_sampler()},
            TrainConfig{},
            false};
}

ExperimentSpec make_d4() {
    Representation rep = Representation::from_qubit_permutations(
        GroupPresentation{"d4", {"r", "F"}, 8}, 4,
        {{"r", Permutation::from_cycles(4, Cycles{{0, 1, 2, 3}})},
         {"F", Permutation::from_cycles(4, Cycles{{0, 1}, {2, 3}})}});
    const ComplexMatrix u_inv =
        permutation_operator(Permutation::from_cycles(4, Cycles{{0, 2}, {1, 3}})) *
        gates::tensor_power(gates::Y(), 4);
    CircuitSpec circuit = make_circuit(4, EmbeddingArch::rzry_2feature(4), {}, u_inv,
                                       PauliObservable("ZZZZ"), rep);
    DataAction action = [](const std::string &g, const DataPoint &x) -> DataPoint {
        const auto &p = features(x);
        if (p.size() != 2) {
            throw std::invalid_argument("d4 action: expected a 2-vector");
        }
        if (g == "r") {
            return std::vector<double>{-p[1], p[0]};
        }
        if (g == "F") {
            return std::vector<double>{p[1], p[0]};
        }
        throw std::invalid_argument("d4 action: unknown generator " + g);
    };
    DataSampler sampler = [](Rng &rng) -> DataPoint {
        const double x = uniform(rng, -1.5, 1.5);
        const double y = uniform(rng, -1.5, 1.5);
        return std::vector<double>{x, y};
    };
    return {"d4",
            "symmetries of the square on [-1.5, 1.5]^2, RZ.RY embedding, observable ZZZZ",
            rep,
            TrainingTask{std::move(circuit), rep.group().generators, std::move(action),
                         std::move(sampler)},
            TrainConfig{},
            false};
}

ExperimentSpec make_s6(double edge_probability) {
    const auto transposition = Permutation::from_cycles(6, Cycles{{0, 1}});
    const auto cycle = Permutation::from_cycles(6, Cycles{{0, 1, 2, 3, 4, 5}});
    Representation rep = Representation::from_qubit_permutations(
        GroupPresentation{"s6", {"t", "c"}, 720}, 6, {{"t", transposition}, {"c", cycle}});
    CircuitSpec circuit =
        make_circuit(6, EmbeddingArch::graph_cry(6), {},
                     gates::tensor_power(gates::Y(), 6), PauliObservable("ZZZZZZ"), rep);
    DataAction action = [transposition, cycle](const std::string &g,
                                               const DataPoint &x) -> DataPoint {
        if (g == "t") {
            return graph(x).relabel(transposition);
        }
        if (g == "c") {
            return graph(x).relabel(cycle);
        }
        throw std::invalid_argument("s6 action: unknown generator " + g);
    };
    DataSampler sampler = [edge_probability](Rng &rng) -> DataPoint {
        return random_digraph(rng, 6, edge_probability);
    };
    return {"s6",
            "node relabelling of 6-node digraphs, graph CRY embedding, observable ZZZZZZ",
            rep,
            TrainingTask{std::move(circuit), rep.group().generators, std::move(action),
                         std::move(sampler)},
            TrainConfig{},
            false};
}

ExperimentSpec make_intertwiner(const ExperimentOptions &options) {
    const bool both = options.intertwiner_group == "c2c2";
    if (!both && options.intertwiner_group != "c2") {
        throw ConfigError("intertwiner supports groups c2 and c2c2, got '" +
                          options.intertwiner_group + "'");
    }
    if (options.intertwiner_layers < 1) {
        throw ConfigError("intertwiner needs at least one layer");
    }
    std::map<std::string, ComplexMatrix> images{{"Fv", pauli_matrix("ZI")}};
    std::vector<std::string> gens{"Fv"};
    if (both) {
        images.emplace("Fh", pauli_matrix("IZ"));
        gens.push_back("Fh");
    }
    Representation rep = Representation::from_unitaries(
        GroupPresentation{"intertwiner-" + options.intertwiner_group, gens,
                          both ? 4u : 2u},
        images);
    CircuitSpec circuit =
        make_circuit(2, EmbeddingArch::amplitude_then_unitary(2, options.intertwiner_layers),
                     {}, std::nullopt, PauliObservable("ZZ"), rep);
    return {"intertwiner",
            "amplitude embedding plus trainable unitary, W(Fv) = ZI, W(Fh) = IZ",
            rep,
            TrainingTask{std::move(circuit), gens, image_action(), image_sampler()},
            TrainConfig{},
            false};
}

} // namespace

std::vector<std::string> list_experiments() {
    return {"line2x2", "c2", "c2c2", "d4", "s6", "intertwiner"};
}

ExperimentSpec make_experiment(const std::string &name, const ExperimentOptions &options) {
    ExperimentSpec spec = [&] {
        if (name == "line2x2") {
            return make_line2x2();
        }
        if (name == "c2") {
            return make_c2();
        }
        if (name == "c2c2") {
            return make_c2c2();
        }
        if (name == "d4") {
            return make_d4();
        }
        if (name == "s6") {
            if (!(options.edge_probability >= 0.0 && options.edge_probability <= 1.0)) {
                throw ConfigError("edge_probability must lie in [0, 1]");
            }
            return make_s6(options.edge_probability);
        }
        if (name == "intertwiner") {
            return make_intertwiner(options);
        }
        throw ConfigError("unknown experiment '" + name + "'");
    }();
    spec.defaults.experiment = spec.name;
    return spec;
}

std::vector<double> line_template(LineLabel label, std::size_t index) {
    if (index > 1) {
        throw std::invalid_argument("line_template: index must be 0 or 1");
    }
    std::vector<double> v(4, 0.0);
    if (label == LineLabel::Vertical) {
        v[index] = v[index + 2] = 1.0;
    } else {
        v[2 * index] = v[2 * index + 1] = 1.0;
    }
    return v;
}

std::vector<LineImage> gen_line_images(std::size_t n, Rng &rng) {
    std::vector<LineImage> out;
    out.reserve(n);
    // Alternate the labels and then shuffle, so any n is balanced to within one.
    const LineLabel first = rademacher(rng) > 0 ? LineLabel::Vertical : LineLabel::Horizontal;
    for (std::size_t i = 0; i < n; ++i) {
        const LineLabel label =
            i % 2 == 0 ? first
                       : (first == LineLabel::Vertical ? LineLabel::Horizontal
                                                       : LineLabel::Vertical);
        const auto lit = line_template(label, uniform_index(rng, 2));
        std::vector<double> pixels(4);
        for (std::size_t k = 0; k < 4; ++k) {
            pixels[k] = lit[k] > 0.0 ? uniform(rng, 0.7, 1.0) : uniform(rng, 0.0, 0.3);
        }
        out.push_back({std::move(pixels), label});
    }
    for (std::size_t i = out.size(); i > 1; --i) {
        std::swap(out[i - 1], out[uniform_index(rng, i)]);
    }
    return out;
}

std::vector<LabeledPoint> to_labeled(std::span<const LineImage> images) {
    std::vector<LabeledPoint> out;
    out.reserve(images.size());
    for (const auto &img : images) {
        out.push_back({img.pixels, img.label == LineLabel::Vertical ? 1.0 : -1.0});
    }
    return out;
}

LineLabel predict_line(const CircuitSpec &spec, std::span<const double> theta,
                       const std::vector<double> &pixels) {
    return estimate(spec, theta, pixels) > 0.0 ? LineLabel::Vertical
                                               : LineLabel::Horizontal;
}

double line_accuracy(const CircuitSpec &spec, std::span<const double> theta,
                     std::span<const LineImage> images) {
    if (images.empty()) {
        return 0.0;
    }
    std::size_t hits = 0;
    for (const auto &img : images) {
        hits += predict_line(spec, theta, img.pixels) == img.label ? 1 : 0;
    }
    return static_cast<double>(hits) / static_cast<double>(images.size());
}

GraphData random_digraph(Rng &rng, std::size_t nodes, double edge_probability) {
    std::vector<GraphData::Edge> edges;
    for (std::size_t i = 0; i < nodes; ++i) {
        for (std::size_t j = 0; j < nodes; ++j) {
            if (bernoulli(rng, edge_probability)) {
                edges.emplace_back(i, j);
            }
        }
    }
    return {nodes, std::move(edges)};
}

std::vector<DataPoint> sample_data(const ExperimentSpec &spec, std::size_t n, Rng &rng) {
    std::vector<DataPoint> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        out.push_back(spec.task.sampler(rng));
    }
    return out;
}

int checkerboard_label(std::span<const double> p) {
    if (p.size() != 2 || !(std::abs(p[0]) <= 1.5) || !(std::abs(p[1]) <= 1.5)) {
        throw std::invalid_argument("checkerboard_label: point outside [-1.5, 1.5]^2");
    }
    auto cell = [](double v) {
        return std::clamp(static_cast<int>(std::floor(v + 1.5)), 0, 2);
    };
    return (cell(p[0]) + cell(p[1])) % 2;
}

TrainRecord train(const TrainConfig &config, const ExperimentSpec &spec) {
    if (!spec.classifier) {
        return train(config, spec.task);
    }
    config.validate();
    Rng data_rng = make_stream(config.seed, Stream::Data);
    Rng val_rng = make_stream(config.seed, Stream::Validation);
    const auto train_images = gen_line_images(200, data_rng);
    const auto val_images = gen_line_images(config.validation_size, val_rng);
    const auto train_set = to_labeled(train_images);
    const auto val_set = to_labeled(val_images);
    return train_classifier(config, spec.circuit(), train_set, val_set);
}

double orbit_spread(const ExperimentSpec &spec, std::span<const double> theta,
                    const DataPoint &x, std::span<const GroupMember> elements) {
    double lo = 0.0;
    double hi = 0.0;
    bool first = true;
    for (const auto &m : elements) {
        const double h = estimate(spec.circuit(), theta, act(spec.task.action, m.element, x));
        if (first) {
            lo = hi = h;
            first = false;
        } else {
            lo = std::min(lo, h);
            hi = std::max(hi, h);
        }
    }
    return hi - lo;
}

InvarianceSummary invariance_summary(const ExperimentSpec &spec,
                                     std::span<const double> theta, std::size_t samples,
                                     std::uint64_t seed) {
    if (theta.size() != spec.circuit().num_params) {
        throw std::invalid_argument("expected " +
                                    std::to_string(spec.circuit().num_params) +
                                    " parameters, got " + std::to_string(theta.size()));
    }
    Rng rng = make_stream(seed, Stream::Check);
    const auto points = sample_data(spec, samples, rng);
    const auto elements = enumerate_group(spec.w_rep, 100000, false);
    InvarianceSummary out;
    out.samples = samples;
    out.generator_gap.assign(spec.task.generators.size(), 0.0);
    for (const auto &x : points) {
        const double base = estimate(spec.circuit(), theta, x);
        for (std::size_t i = 0; i < spec.task.generators.size(); ++i) {
            const double moved = estimate(
                spec.circuit(), theta, spec.task.action(spec.task.generators[i], x));
            out.generator_gap[i] = std::max(out.generator_gap[i], std::abs(moved - base));
        }
        out.max_orbit_spread =
            std::max(out.max_orbit_spread, orbit_spread(spec, theta, x, elements));
    }
    for (double g : out.generator_gap) {
        out.max_generator_gap = std::max(out.max_generator_gap, g);
    }
    if (spec.circuit().invariant_unitary) {
        out.invariant_unitary_commutators =
            is_invariant(spec.w_rep, *spec.circuit().invariant_unitary).per_generator;
    }
    out.observable_commutators =
        is_invariant(spec.w_rep, spec.circuit().observable.matrix()).per_generator;
    return out;
}

} // namespace equivar
