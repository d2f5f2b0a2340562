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

#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <system_error>

#include <json.hpp>

namespace equivar::cli {

namespace {

using Json = nlohmann::ordered_json;

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

struct Entry {
    std::string value;
    std::size_t line;
};

[[noreturn]] void bad_value(const std::string &key, const Entry &e, const char *expected) {
    throw ConfigError("line " + std::to_string(e.line) + ": " + key + " = '" + e.value +
                      "' is not " + expected);
}

std::uint64_t to_uint(const std::string &key, const Entry &e) {
    std::uint64_t v = 0;
    const char *end = e.value.data() + e.value.size();
    const auto [ptr, ec] = std::from_chars(e.value.data(), end, v);
    if (ec != std::errc{} || ptr != end) {
        bad_value(key, e, "a non-negative integer");
    }
    return v;
}

double to_real(const std::string &key, const Entry &e) {
    double v = 0.0;
    const char *end = e.value.data() + e.value.size();
    const auto [ptr, ec] = std::from_chars(e.value.data(), end, v);
    if (ec != std::errc{} || ptr != end || !std::isfinite(v)) {
        bad_value(key, e, "a finite number");
    }
    return v;
}

bool to_bool(const std::string &key, const Entry &e) {
    if (e.value == "true") {
        return true;
    }
    if (e.value == "false") {
        return false;
    }
    bad_value(key, e, "true or false");
}

const std::map<std::string, std::vector<std::string>> &known_keys() {
    static const std::map<std::string, std::vector<std::string>> keys{
        {"experiment", {"name", "intertwiner_group", "intertwiner_layers", "edge_probability"}},
        {"train",
         {"seed", "epochs", "batch_size", "learning_rate", "c0", "gamma", "minibatch",
          "validation_size", "fixed_data"}},
        {"output", {"dir", "loss_csv", "params_csv", "summary_json"}},
    };
    return keys;
}

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string format_entry(Complex z) {
    auto clean = [](double v) { return std::abs(v) < 5e-13 ? 0.0 : v; };
    const double re = clean(z.real());
    const double im = clean(z.imag());
    char buf[64];
    if (im == 0.0) {
        std::snprintf(buf, sizeof buf, "%.6g", re);
    } else {
        std::snprintf(buf, sizeof buf, "%.6g%+.6gi", re, im);
    }
    return buf;
}

Json options_json(const ExperimentOptions &o) {
    return Json{{"intertwiner_group", o.intertwiner_group},
                {"intertwiner_layers", o.intertwiner_layers},
                {"edge_probability", o.edge_probability}};
}

Json invariance_json(const ExperimentSpec &spec, const InvarianceSummary &s) {
    Json gaps = Json::object();
    for (std::size_t i = 0; i < spec.task.generators.size(); ++i) {
        gaps[spec.task.generators[i]] = s.generator_gap[i];
    }
    Json j{{"samples", s.samples},
           {"check_seed", kCheckSeed},
           {"generator_gap", gaps},
           {"max_generator_gap", s.max_generator_gap},
           {"max_orbit_spread", s.max_orbit_spread}};
    j["invariant_unitary_commutators"] =
        s.invariant_unitary_commutators ? Json(*s.invariant_unitary_commutators) : Json();
    j["observable_commutators"] = s.observable_commutators;
    return j;
}

double held_out_accuracy(const ExperimentSpec &spec, const std::vector<double> &theta) {
    Rng rng = make_stream(kCheckSeed, Stream::Data);
    const auto images = gen_line_images(200, rng);
    return line_accuracy(spec.circuit(), theta, images);
}

std::string read_text(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ConfigError("cannot read " + path.string());
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::ofstream open_output(const std::filesystem::path &path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw ConfigError("cannot write " + path.string());
    }
    return out;
}

template <class F> int guarded(std::ostream &err, F &&body) {
    try {
        return body();
    } catch (const ConfigError &e) {
        err << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const NumericalError &e) {
        err << "numerical failure: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const std::invalid_argument &e) {
        err << "invalid input: " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    }
}

} // namespace

RunConfig parse_run_config(std::string_view text) {
    std::map<std::string, std::map<std::string, Entry>> sections;
    std::string current;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto eol = text.find('\n', pos);
        std::string_view line =
            text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const std::string where = "line " + std::to_string(line_no) + ": ";
        if (line.front() == '[') {
            if (line.back() != ']') {
                throw ConfigError(where + "unterminated section header");
            }
            current = std::string(trim(line.substr(1, line.size() - 2)));
            if (!known_keys().contains(current)) {
                throw ConfigError(where + "unknown section [" + current + "]");
            }
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ConfigError(where + "expected key = value");
        }
        if (current.empty()) {
            throw ConfigError(where + "key outside of any section");
        }
        const std::string key(trim(line.substr(0, eq)));
        const std::string value(trim(line.substr(eq + 1)));
        const auto &allowed = known_keys().at(current);
        if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
            throw ConfigError(where + "unknown key '" + key + "' in [" + current + "]");
        }
        if (!sections[current].emplace(key, Entry{value, line_no}).second) {
            throw ConfigError(where + "duplicate key '" + key + "'");
        }
    }

    auto find = [&](const std::string &section, const std::string &key) -> const Entry * {
        const auto s = sections.find(section);
        if (s == sections.end()) {
            return nullptr;
        }
        const auto k = s->second.find(key);
        return k == s->second.end() ? nullptr : &k->second;
    };

    RunConfig cfg;
    const Entry *name = find("experiment", "name");
    if (name == nullptr || name->value.empty()) {
        throw ConfigError("missing [experiment] name");
    }
    cfg.experiment = name->value;
    if (const auto *e = find("experiment", "intertwiner_group")) {
        cfg.options.intertwiner_group = e->value;
    }
    if (const auto *e = find("experiment", "intertwiner_layers")) {
        cfg.options.intertwiner_layers = to_uint("intertwiner_layers", *e);
    }
    if (const auto *e = find("experiment", "edge_probability")) {
        cfg.options.edge_probability = to_real("edge_probability", *e);
    }

    cfg.train = make_experiment(cfg.experiment, cfg.options).defaults;
    if (const auto *e = find("train", "seed")) {
        cfg.train.seed = to_uint("seed", *e);
    }
    if (const auto *e = find("train", "epochs")) {
        cfg.train.epochs = to_uint("epochs", *e);
    }
    if (const auto *e = find("train", "batch_size")) {
        cfg.train.batch_size = to_uint("batch_size", *e);
    }
    if (const auto *e = find("train", "learning_rate")) {
        cfg.train.learning_rate = to_real("learning_rate", *e);
    }
    if (const auto *e = find("train", "c0")) {
        cfg.train.spsa.c0 = to_real("c0", *e);
    }
    if (const auto *e = find("train", "gamma")) {
        cfg.train.spsa.gamma = to_real("gamma", *e);
    }
    if (const auto *e = find("train", "minibatch")) {
        cfg.train.minibatch = to_uint("minibatch", *e);
    }
    if (const auto *e = find("train", "validation_size")) {
        cfg.train.validation_size = to_uint("validation_size", *e);
    }
    if (const auto *e = find("train", "fixed_data")) {
        cfg.train.fixed_data = to_bool("fixed_data", *e);
    }
    cfg.train.validate();

    if (const auto *e = find("output", "dir")) {
        if (e->value.empty()) {
            throw ConfigError("line " + std::to_string(e->line) + ": empty output dir");
        }
        cfg.output_dir = e->value;
    }
    if (const auto *e = find("output", "loss_csv")) {
        cfg.loss_csv = to_bool("loss_csv", *e);
    }
    if (const auto *e = find("output", "params_csv")) {
        cfg.params_csv = to_bool("params_csv", *e);
    }
    if (const auto *e = find("output", "summary_json")) {
        cfg.summary_json = to_bool("summary_json", *e);
    }
    return cfg;
}

std::filesystem::path resolve_output_dir(const RunConfig &config) {
    if (config.output_dir) {
        return *config.output_dir;
    }
    const char *root = std::getenv(kOutputEnv);
    const std::filesystem::path base = root != nullptr && *root != '\0' ? root : "runs";
    return base / (config.experiment + "-seed" + std::to_string(config.train.seed));
}

std::vector<double> read_params_file(const std::filesystem::path &path) {
    const std::string text = read_text(path);
    if (path.extension() == ".json") {
        Json j;
        try {
            j = Json::parse(text);
        } catch (const Json::exception &e) {
            throw ConfigError(path.string() + ": " + e.what());
        }
        if (!j.contains("final_params") || !j["final_params"].is_array()) {
            throw ConfigError(path.string() + ": no final_params array");
        }
        return j["final_params"].get<std::vector<double>>();
    }
    std::istringstream in(text);
    std::string line;
    std::string last;
    bool header = true;
    while (std::getline(in, line)) {
        if (header) {
            header = false;
            continue;
        }
        if (!trim(line).empty()) {
            last = line;
        }
    }
    if (last.empty()) {
        throw ConfigError(path.string() + ": no parameter rows");
    }
    std::vector<double> theta;
    std::istringstream row(last);
    std::string cell;
    bool first = true;
    while (std::getline(row, cell, ',')) {
        if (first) {
            first = false;
            continue;
        }
        const std::string_view v = trim(cell);
        double x = 0.0;
        const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
        if (ec != std::errc{} || ptr != v.data() + v.size()) {
            throw ConfigError(path.string() + ": bad number '" + std::string(v) + "'");
        }
        theta.push_back(x);
    }
    return theta;
}

int cmd_run(const std::filesystem::path &config_path, std::ostream &out, std::ostream &err) {
    return guarded(err, [&] {
        const RunConfig cfg = parse_run_config(read_text(config_path));
        const ExperimentSpec spec = make_experiment(cfg.experiment, cfg.options);
        const auto dir = resolve_output_dir(cfg);
        std::error_code ec;
        std::filesystem::create_directories(dir, ec);
        if (ec) {
            throw ConfigError("cannot create output directory " + dir.string() + ": " +
                              ec.message());
        }
        std::ofstream loss_out;
        std::ofstream params_out;
        std::ofstream summary_out;
        if (cfg.loss_csv) {
            loss_out = open_output(dir / "loss.csv");
        }
        if (cfg.params_csv) {
            params_out = open_output(dir / "params.csv");
        }
        if (cfg.summary_json) {
            summary_out = open_output(dir / "summary.json");
        }

        const auto start = std::chrono::steady_clock::now();
        const TrainRecord rec = train(cfg.train, spec);
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

        if (cfg.loss_csv) {
            loss_out << "epoch,train_loss,val_loss\n";
            for (std::size_t e = 0; e < rec.train_loss.size(); ++e) {
                loss_out << e + 1 << ',' << format_double(rec.train_loss[e]) << ','
                         << format_double(rec.val_loss[e]) << '\n';
            }
        }
        if (cfg.params_csv) {
            params_out << "epoch";
            for (std::size_t i = 0; i < rec.final_params.size(); ++i) {
                params_out << ",theta" << i;
            }
            params_out << '\n';
            auto row = [&](std::size_t epoch, const std::vector<double> &theta) {
                params_out << epoch;
                for (double t : theta) {
                    params_out << ',' << format_double(t);
                }
                params_out << '\n';
            };
            row(0, rec.initial_params);
            for (std::size_t e = 0; e < rec.params.size(); ++e) {
                row(e + 1, rec.params[e]);
            }
        }

        const auto inv = invariance_summary(spec, rec.final_params);
        if (cfg.summary_json) {
            Json j;
            j["experiment"] = spec.name;
            j["seed"] = cfg.train.seed;
            j["options"] = options_json(cfg.options);
            j["config"] = Json{{"epochs", cfg.train.epochs},
                               {"batch_size", cfg.train.batch_size},
                               {"learning_rate", cfg.train.learning_rate},
                               {"c0", cfg.train.spsa.c0},
                               {"gamma", cfg.train.spsa.gamma},
                               {"minibatch", cfg.train.minibatch},
                               {"validation_size", cfg.train.validation_size},
                               {"fixed_data", cfg.train.fixed_data}};
            j["initial_params"] = rec.initial_params;
            j["final_params"] = rec.final_params;
            j["initial_val_loss"] = rec.initial_val_loss;
            j["final_train_loss"] = rec.train_loss.back();
            j["final_val_loss"] = rec.val_loss.back();
            if (spec.classifier) {
                j["held_out_accuracy"] = held_out_accuracy(spec, rec.final_params);
            }
            j["invariance"] = invariance_json(spec, inv);
            j["wall_seconds"] = seconds;
            summary_out << j.dump(2) << '\n';
        }
        for (auto *s : {&loss_out, &params_out, &summary_out}) {
            if (s->is_open() && !s->flush()) {
                throw std::runtime_error("write failed in " + dir.string());
            }
        }

        char line[160];
        std::snprintf(line, sizeof line,
                      "%s seed %llu: val loss %.3e -> %.3e, max generator gap %.3e (%.1f s)",
                      spec.name.c_str(), static_cast<unsigned long long>(cfg.train.seed),
                      rec.initial_val_loss, rec.val_loss.back(), inv.max_generator_gap,
                      seconds);
        out << line << '\n' << "wrote " << dir.string() << '\n';
        return kExitOk;
    });
}

int cmd_check(const std::string &experiment, const std::filesystem::path &params_path,
              std::ostream &out, std::ostream &err, const ExperimentOptions &options) {
    return guarded(err, [&] {
        ExperimentOptions opts = options;
        if (params_path.extension() == ".json") {
            const Json j = Json::parse(read_text(params_path), nullptr, false);
            if (!j.is_discarded() && j.contains("options")) {
                const auto &o = j["options"];
                opts.intertwiner_group = o.value("intertwiner_group", opts.intertwiner_group);
                opts.intertwiner_layers =
                    o.value("intertwiner_layers", opts.intertwiner_layers);
                opts.edge_probability = o.value("edge_probability", opts.edge_probability);
            }
        }
        const ExperimentSpec spec = make_experiment(experiment, opts);
        const auto theta = read_params_file(params_path);
        if (theta.size() != spec.circuit().num_params) {
            throw ConfigError(experiment + " expects " +
                              std::to_string(spec.circuit().num_params) +
                              " parameters, file has " + std::to_string(theta.size()));
        }
        const auto inv = invariance_summary(spec, theta);
        const auto order = enumerate_group(spec.w_rep, 100000, false).size();
        char buf[200];
        out << "experiment " << spec.name << ", " << theta.size() << " parameters, "
            << inv.samples << " samples\n";
        for (std::size_t i = 0; i < spec.task.generators.size(); ++i) {
            std::snprintf(buf, sizeof buf, "generator %-4s max |h(gx) - h(x)| = %.3e",
                          spec.task.generators[i].c_str(), inv.generator_gap[i]);
            out << buf << '\n';
        }
        std::snprintf(buf, sizeof buf, "max orbit spread over %zu elements = %.3e", order,
                      inv.max_orbit_spread);
        out << buf << '\n';
        auto commutators = [&](const char *what, const std::vector<double> &norms) {
            for (std::size_t i = 0; i < norms.size(); ++i) {
                std::snprintf(buf, sizeof buf, "%s commutator with W(%s) = %.3e", what,
                              spec.task.generators[i].c_str(), norms[i]);
                out << buf << '\n';
            }
        };
        if (inv.invariant_unitary_commutators) {
            commutators("U_inv", *inv.invariant_unitary_commutators);
        }
        commutators("observable", inv.observable_commutators);
        Json j{{"experiment", spec.name}, {"invariance", invariance_json(spec, inv)}};
        if (spec.classifier) {
            const double acc = held_out_accuracy(spec, theta);
            std::snprintf(buf, sizeof buf, "held-out accuracy = %.4f", acc);
            out << buf << '\n';
            j["held_out_accuracy"] = acc;
        }
        out << j.dump() << '\n';
        return kExitOk;
    });
}

int cmd_twirl(const std::string &group, const std::string &pauli, std::ostream &out,
              std::ostream &err) {
    return guarded(err, [&] {
        if (group != "c2" && group != "c2c2" && group != "d4" && group != "s6") {
            throw ConfigError("twirl groups are c2, c2c2, d4 and s6, got '" + group + "'");
        }
        const ExperimentSpec spec = make_experiment(group);
        const std::size_t n = spec.circuit().num_qubits;
        if (!is_pauli_word(pauli) || pauli.size() != n) {
            throw ConfigError("'" + pauli + "' is not a Pauli string of length " +
                              std::to_string(n));
        }
        const auto order = enumerate_group(spec.w_rep, 100000, false).size();
        const ComplexMatrix t = twirl(spec.w_rep, pauli_matrix(pauli));
        const auto report = is_invariant(spec.w_rep, t);
        out << "twirl of " << pauli << " over " << group << " (order " << order << ")\n";
        out << "pauli expansion:\n";
        char buf[64];
        for (const auto &term : pauli_decompose(t)) {
            std::snprintf(buf, sizeof buf, "  %+.6g %s", term.coefficient, term.word.c_str());
            out << buf << '\n';
        }
        out << "matrix (" << t.rows() << "x" << t.cols() << "):\n";
        for (std::size_t r = 0; r < t.rows(); ++r) {
            for (std::size_t c = 0; c < t.cols(); ++c) {
                out << (c == 0 ? "" : " ") << format_entry(t(r, c));
            }
            out << '\n';
        }
        std::snprintf(buf, sizeof buf, "%.3e", report.max_norm);
        out << "certificate: max generator commutator norm = " << buf << '\n';
        return kExitOk;
    });
}

int cmd_list(std::ostream &out) {
    for (const auto &name : list_experiments()) {
        const auto spec = make_experiment(name);
        out << name << "\t" << spec.circuit().num_qubits << " qubits, "
            << spec.circuit().num_params << " parameters\t" << spec.description << '\n';
    }
    return kExitOk;
}

} // namespace equivar::cli
