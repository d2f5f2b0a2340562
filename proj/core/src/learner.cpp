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

#include "equivar/learner.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <optional>

namespace equivar {

namespace {

void require_finite(double value, const char *what, std::size_t epoch) {
    if (!std::isfinite(value)) {
        throw NumericalError(std::string("non-finite ") + what + " at epoch " +
                             std::to_string(epoch));
    }
}

// Shared descent loop. `draw` produces one epoch of items from the batch
// stream, `loss` scores a parameter vector on a contiguous run of items and
// `validate` scores it on the held-out set.
template <class Item, class Draw, class Loss>
TrainRecord descend(const TrainConfig &config, std::size_t num_params, Draw draw,
                    Loss loss, const ScalarObjective &validate) {
    config.validate();
    TrainRecord rec;
    rec.config = config;
    std::vector<double> theta = initial_parameters(num_params, config.seed);
    rec.initial_params = theta;
    rec.initial_val_loss = validate(theta);
    require_finite(rec.initial_val_loss, "validation loss", 0);

    Rng batch_rng = make_stream(config.seed, Stream::Batch);
    Rng spsa_rng = make_stream(config.seed, Stream::Spsa);
    std::size_t k = 0;
    for (std::size_t epoch = 1; epoch <= config.epochs; ++epoch) {
        const auto start = std::chrono::steady_clock::now();
        const std::vector<Item> items = draw(batch_rng);
        const std::span<const Item> all(items);
        double weighted = 0.0;
        for (std::size_t first = 0; first < all.size(); first += config.minibatch) {
            const auto chunk = all.subspan(first, std::min(config.minibatch,
                                                           all.size() - first));
            const ScalarObjective objective = [&](std::span<const double> t) {
                return loss(t, chunk);
            };
            const SpsaEstimate est =
                spsa_estimate(objective, theta, k++, config.spsa, spsa_rng);
            require_finite(est.loss_plus, "training loss", epoch);
            require_finite(est.loss_minus, "training loss", epoch);
            weighted += 0.5 * (est.loss_plus + est.loss_minus) *
                        static_cast<double>(chunk.size());
            for (std::size_t i = 0; i < theta.size(); ++i) {
                theta[i] -= config.learning_rate * est.gradient[i];
                require_finite(theta[i], "parameter", epoch);
            }
        }
        const double val = validate(theta);
        require_finite(val, "validation loss", epoch);
        rec.train_loss.push_back(weighted / static_cast<double>(all.size()));
        rec.val_loss.push_back(val);
        rec.params.push_back(theta);
        rec.epoch_seconds.push_back(
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                .count());
    }
    rec.final_params = std::move(theta);
    return rec;
}

} // namespace

double SpsaSettings::perturbation(std::size_t k) const {
    return c0 / std::pow(static_cast<double>(k + 1), gamma);
}

void TrainConfig::validate() const {
    if (epochs < 1) {
        throw ConfigError("epochs must be at least 1");
    }
    if (batch_size < 1) {
        throw ConfigError("batch_size must be at least 1");
    }
    if (minibatch < 1) {
        throw ConfigError("minibatch must be at least 1");
    }
    if (validation_size < 1) {
        throw ConfigError("validation_size must be at least 1");
    }
    if (!(learning_rate > 0.0) || !std::isfinite(learning_rate)) {
        throw ConfigError("learning_rate must be positive");
    }
    if (!(spsa.c0 > 0.0) || !std::isfinite(spsa.c0)) {
        throw ConfigError("c0 must be positive");
    }
    if (!(spsa.gamma >= 0.0) || !std::isfinite(spsa.gamma)) {
        throw ConfigError("gamma must be non-negative");
    }
}

DataPoint act(const DataAction &action, const GroupElement &g, const DataPoint &x) {
    DataPoint out = x;
    for (auto it = g.word.rbegin(); it != g.word.rend(); ++it) {
        out = action(*it, out);
    }
    return out;
}

double equivariance_loss(const CircuitSpec &spec, std::span<const double> theta,
                         const GroupElement &g, const DataPoint &x,
                         const DataAction &action) {
    const double d = estimate(spec, theta, act(action, g, x)) - estimate(spec, theta, x);
    return d * d;
}

double batch_loss(const CircuitSpec &spec, std::span<const double> theta,
                  std::span<const LossSample> batch, const DataAction &action) {
    if (batch.empty()) {
        throw std::invalid_argument("batch_loss: empty batch");
    }
    double sum = 0.0;
    for (const auto &s : batch) {
        sum += equivariance_loss(spec, theta, s.g, s.x, action);
    }
    return sum / static_cast<double>(batch.size());
}

SpsaEstimate spsa_estimate(const ScalarObjective &objective,
                           std::span<const double> theta, std::size_t k,
                           const SpsaSettings &settings, Rng &rng) {
    const std::size_t p = theta.size();
    const double c = settings.perturbation(k);
    std::vector<double> delta(p);
    for (auto &d : delta) {
        d = rademacher(rng);
    }
    std::vector<double> shifted(theta.begin(), theta.end());
    for (std::size_t i = 0; i < p; ++i) {
        shifted[i] = theta[i] + c * delta[i];
    }
    SpsaEstimate est;
    est.loss_plus = objective(shifted);
    for (std::size_t i = 0; i < p; ++i) {
        shifted[i] = theta[i] - c * delta[i];
    }
    est.loss_minus = objective(shifted);
    const double diff = est.loss_plus - est.loss_minus;
    est.gradient.resize(p);
    for (std::size_t i = 0; i < p; ++i) {
        est.gradient[i] = diff / (2.0 * c * delta[i]);
    }
    return est;
}

std::vector<double> spsa_gradient(const CircuitSpec &spec, std::span<const double> theta,
                                  std::span<const LossSample> batch, std::size_t k,
                                  Rng &rng, const DataAction &action,
                                  const SpsaSettings &settings) {
    const ScalarObjective objective = [&](std::span<const double> t) {
        return batch_loss(spec, t, batch, action);
    };
    return spsa_estimate(objective, theta, k, settings, rng).gradient;
}

std::vector<LossSample> validation_set(const TrainingTask &task, std::size_t n,
                                       std::uint64_t seed) {
    Rng rng = make_stream(seed, Stream::Validation);
    std::vector<LossSample> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        out.push_back({GroupElement{{task.generators[i % task.generators.size()]}},
                       task.sampler(rng)});
    }
    return out;
}

std::vector<double> initial_parameters(std::size_t count, std::uint64_t seed) {
    Rng rng = make_stream(seed, Stream::Init);
    std::vector<double> theta(count);
    for (auto &t : theta) {
        t = uniform(rng, 0.0, 2.0 * std::numbers::pi);
    }
    return theta;
}

TrainRecord train(const TrainConfig &config, const TrainingTask &task) {
    config.validate();
    if (task.generators.empty()) {
        throw ConfigError("training task has no generators");
    }
    const auto val_set = validation_set(task, config.validation_size, config.seed);
    std::optional<DataPoint> fixed;
    auto draw = [&](Rng &rng) {
        if (config.fixed_data && !fixed) {
            fixed = task.sampler(rng);
        }
        std::vector<LossSample> items;
        items.reserve(config.batch_size);
        for (std::size_t i = 0; i < config.batch_size; ++i) {
            GroupElement g{{task.generators[uniform_index(rng, task.generators.size())]}};
            items.push_back({std::move(g), fixed ? *fixed : task.sampler(rng)});
        }
        return items;
    };
    auto loss = [&](std::span<const double> t, std::span<const LossSample> chunk) {
        return batch_loss(task.circuit, t, chunk, task.action);
    };
    const ScalarObjective validate = [&](std::span<const double> t) {
        return batch_loss(task.circuit, t, val_set, task.action);
    };
    return descend<LossSample>(config, task.circuit.num_params, draw, loss, validate);
}

double invariance_gap(const CircuitSpec &spec, std::span<const double> theta,
                      const std::vector<std::string> &generators,
                      std::span<const DataPoint> points, const DataAction &action) {
    double worst = 0.0;
    for (const auto &x : points) {
        const double base = estimate(spec, theta, x);
        for (const auto &g : generators) {
            worst = std::max(worst, std::abs(estimate(spec, theta, action(g, x)) - base));
        }
    }
    return worst;
}

double mse_loss(const CircuitSpec &spec, std::span<const double> theta,
                std::span<const LabeledPoint> batch) {
    if (batch.empty()) {
        throw std::invalid_argument("mse_loss: empty batch");
    }
    double sum = 0.0;
    for (const auto &p : batch) {
        const double d = estimate(spec, theta, p.x) - p.target;
        sum += d * d;
    }
    return sum / static_cast<double>(batch.size());
}

TrainRecord train_classifier(const TrainConfig &config, const CircuitSpec &spec,
                             std::span<const LabeledPoint> train_set,
                             std::span<const LabeledPoint> validation) {
    if (train_set.empty() || validation.empty()) {
        throw ConfigError("classifier training needs non-empty data sets");
    }
    const std::size_t take = std::min(config.batch_size, train_set.size());
    auto draw = [&](Rng &rng) {
        std::vector<std::size_t> order(train_set.size());
        for (std::size_t i = 0; i < order.size(); ++i) {
            order[i] = i;
        }
        for (std::size_t i = order.size(); i > 1; --i) {
            std::swap(order[i - 1], order[uniform_index(rng, i)]);
        }
        std::vector<LabeledPoint> items;
        items.reserve(take);
        for (std::size_t i = 0; i < take; ++i) {
            items.push_back(train_set[order[i]]);
        }
        return items;
    };
    auto loss = [&](std::span<const double> t, std::span<const LabeledPoint> chunk) {
        return mse_loss(spec, t, chunk);
    };
    const ScalarObjective validate = [&](std::span<const double> t) {
        return mse_loss(spec, t, validation);
    };
    return descend<LabeledPoint>(config, spec.num_params, draw, loss, validate);
}

} // namespace equivar
