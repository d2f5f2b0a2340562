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

// Acceptance run: one PASS/FAIL line per criterion. Training criteria use
// the default protocol with seeds 1 to 5.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iterator>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "equivar/experiments.hpp"
#include "oracles.hpp"

using namespace equivar;

namespace {

constexpr int kSeeds = 5;
constexpr int kRequiredSeeds = 4;

struct Outcome {
    bool pass;
    std::string detail;
};

class Stopwatch {
  public:
    [[nodiscard]] double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

  private:
    std::chrono::steady_clock::time_point start_{std::chrono::steady_clock::now()};
};

std::string fmt(const char *pattern, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, pattern, args...);
    return buf;
}

TrainConfig defaults_for(const ExperimentSpec &spec, std::uint64_t seed) {
    TrainConfig c = spec.defaults;
    c.seed = seed;
    return c;
}

// Trained records are shared between the training criteria and the
// loss-trend check.
struct Run {
    TrainRecord record;
    double seconds;
};

std::vector<Run> train_seeds(const ExperimentSpec &spec) {
    std::vector<Run> runs;
    for (int seed = 1; seed <= kSeeds; ++seed) {
        Stopwatch sw;
        TrainRecord rec = train(defaults_for(spec, static_cast<std::uint64_t>(seed)), spec);
        runs.push_back({std::move(rec), sw.seconds()});
    }
    return runs;
}

Outcome twirl_algebra() {
    Stopwatch sw;
    std::mt19937_64 rng(101);
    double herm = 0.0;
    double comm = 0.0;
    double idem = 0.0;
    for (const auto *name : {"c2", "c2c2", "d4", "s6"}) {
        const auto spec = make_experiment(name);
        const auto &rep = spec.w_rep;
        for (int trial = 0; trial < 20; ++trial) {
            const auto x = oracle::random_hermitian(rep.dim(), rng);
            const auto t = twirl(rep, x);
            herm = std::max(herm, max_abs_diff(t, t.adjoint()));
            for (std::size_t g = 0; g < rep.num_generators(); ++g) {
                comm = std::max(comm, commutator_norm(t, rep.generator_image(g)));
            }
            idem = std::max(idem, max_abs_diff(twirl(rep, t), t));
        }
    }
    const double s = sw.seconds();
    return {herm < 1e-10 && comm < 1e-9 && idem < 1e-9 && s < 30.0,
            fmt("hermitian %.1e, commutator %.1e, idempotence %.1e, %.1f s", herm, comm, idem, s)};
}

Outcome line_invariance() {
    Stopwatch sw;
    const auto spec = make_experiment("line2x2");
    const auto elements = enumerate_group(spec.w_rep, 16, false);
    Rng data = make_stream(2, Stream::Data);
    Rng params = make_stream(2, Stream::Init);
    const auto images = gen_line_images(100, data);
    double worst = 0.0;
    for (int k = 0; k < 10; ++k) {
        const std::vector<double> theta{uniform(params, 0.0, 2 * std::numbers::pi),
                                        uniform(params, 0.0, 2 * std::numbers::pi)};
        for (const auto &img : images) {
            const double base = estimate(spec.circuit(), theta, img.pixels);
            for (const auto &m : elements) {
                const double moved = estimate(spec.circuit(), theta,
                                              act(spec.task.action, m.element, img.pixels));
                worst = std::max(worst, std::abs(moved - base));
            }
        }
    }
    const double s = sw.seconds();
    return {worst < 1e-9 && elements.size() == 4 && s < 10.0,
            fmt("max |f(gx) - f(x)| = %.1e over %zu elements, %.2f s", worst, elements.size(), s)};
}

Outcome line_classification() {
    Stopwatch sw;
    const auto spec = make_experiment("line2x2");
    const auto rec = train(defaults_for(spec, 1), spec);
    Rng rng = make_stream(kCheckSeed, Stream::Data);
    const auto held_out = gen_line_images(200, rng);
    const double acc = line_accuracy(spec.circuit(), rec.final_params, held_out);
    const double s = sw.seconds();
    return {acc == 1.0 && spec.circuit().num_params <= 2 && s < 60.0,
            fmt("accuracy %.4f on 200 held-out images, %zu parameters, %.1f s", acc,
                spec.circuit().num_params, s)};
}

Outcome paired_parameters(const std::vector<Run> &runs, double tol, double seconds_cap) {
    int passed = 0;
    std::string per_seed;
    for (std::size_t i = 0; i < runs.size(); ++i) {
        const auto &th = runs[i].record.final_params;
        const double loss = runs[i].record.val_loss.back();
        const double d01 = oracle::dist_to_pi_multiple(th[0] - th[1]);
        const double d23 = oracle::dist_to_pi_multiple(th[2] - th[3]);
        const bool ok = loss < 1e-3 && d01 < tol && d23 < tol && runs[i].seconds < seconds_cap;
        passed += ok ? 1 : 0;
        per_seed += fmt("%s seed %zu: loss %.1e, pairs %.3f/%.3f, %.1f s", i == 0 ? "" : ";",
                        i + 1, loss, d01, d23, runs[i].seconds);
    }
    return {passed >= kRequiredSeeds, fmt("%d/%d seeds;", passed, kSeeds) + per_seed};
}

Outcome d4_orbits(const std::vector<Run> &runs) {
    const auto spec = make_experiment("d4");
    const auto elements = enumerate_group(spec.w_rep, 16, false);
    Rng rng = make_stream(kCheckSeed, Stream::Check);
    const auto points = sample_data(spec, 20, rng);
    double worst = 0.0;
    for (const auto &x : points) {
        worst = std::max(worst, orbit_spread(spec, runs.front().record.final_params, x, elements));
    }
    return {worst < 1e-4 && elements.size() == 8,
            fmt("seed 1: max orbit spread %.1e over 20 points x %zu elements", worst,
                elements.size())};
}

Outcome s6_convergence(const std::vector<Run> &runs) {
    const auto spec = make_experiment("s6");
    Rng rng = make_stream(kCheckSeed, Stream::Check);
    const auto points = sample_data(spec, 50, rng);
    int passed = 0;
    std::string per_seed;
    for (std::size_t i = 0; i < runs.size(); ++i) {
        const auto &rec = runs[i].record;
        const double spread = oracle::sample_std(rec.final_params);
        const double before = invariance_gap(spec.circuit(), rec.initial_params,
                                             spec.task.generators, points, spec.task.action);
        const double after = invariance_gap(spec.circuit(), rec.final_params,
                                            spec.task.generators, points, spec.task.action);
        const double ratio = after > 0.0 ? before / after : INFINITY;
        const bool ok = spread < 0.05 && ratio >= 100.0 && runs[i].seconds < 300.0;
        passed += ok ? 1 : 0;
        per_seed += fmt("%s seed %zu: std %.3f, gap %.2e -> %.2e (x%.0f), %.1f s",
                        i == 0 ? "" : ";", i + 1, spread, before, after, ratio,
                        runs[i].seconds);
    }
    return {passed >= kRequiredSeeds, fmt("%d/%d seeds;", passed, kSeeds) + per_seed};
}

// Permutation matrix of a pixel map: out[i] = in[src[i]].
ComplexMatrix pixel_matrix(const std::vector<std::size_t> &src) {
    ComplexMatrix m(4, 4);
    for (std::size_t i = 0; i < 4; ++i) {
        m(i, src[i]) = 1.0;
    }
    return m;
}

Outcome intertwining_norms() {
    // Pixel actions of each group on 2x2 images, with W(g) a conjugated copy
    // of V(g) so neither side vanishes.
    const std::vector<std::size_t> fv{1, 0, 3, 2};
    const std::vector<std::size_t> fh{2, 3, 0, 1};
    const std::vector<std::size_t> rot{2, 0, 3, 1};
    const std::vector<std::vector<std::vector<std::size_t>>> groups{{fv}, {fv, fh}, {rot, fv}};
    std::mt19937_64 rng(8);
    const auto q = herm_expm(oracle::random_hermitian(4, rng), 0.9);
    const auto arch = EmbeddingArch::amplitude(2, 2);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    double worst = 0.0;
    double smallest_side = INFINITY;
    for (int trial = 0; trial < 100; ++trial) {
        const auto &gens = groups[static_cast<std::size_t>(trial) % groups.size()];
        ComplexMatrix v = ComplexMatrix::identity(4);
        const int length = 1 + trial % 4;
        for (int k = 0; k < length; ++k) {
            v = pixel_matrix(gens[rng() % gens.size()]) * v;
        }
        const auto w = q * v * q.adjoint();
        std::vector<double> x(4);
        for (auto &c : x) {
            c = u(rng);
        }
        std::vector<double> vx(4, 0.0);
        for (std::size_t i = 0; i < 4; ++i) {
            for (std::size_t j = 0; j < 4; ++j) {
                vx[i] += v(i, j).real() * x[j];
            }
        }
        const double norm_x = std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2] + x[3] * x[3]);
        const auto raw_x = unnormalized_embed_vector(x);
        const auto raw_vx = unnormalized_embed_vector(vx);
        const auto wx = oracle::matvec(w, raw_x);
        const StateVector tx = embed(arch, {}, x);
        const StateVector tvx = embed(arch, {}, vx);
        const auto wtx = oracle::matvec(w, ComplexVector(tx.amplitudes().begin(), tx.amplitudes().end()));
        double lhs = 0.0;
        double rhs = 0.0;
        for (std::size_t i = 0; i < 4; ++i) {
            lhs += std::norm(wx[i] - raw_vx[i]);
            rhs += std::norm(wtx[i] - tvx[i]);
        }
        lhs = std::sqrt(lhs);
        rhs = norm_x * std::sqrt(rhs);
        worst = std::max(worst, std::abs(lhs - rhs));
        smallest_side = std::min(smallest_side, lhs);
    }
    return {worst < 1e-10,
            fmt("max | |W T^x - T^Vx| - |x| |W Tx - T Vx| | = %.1e over 100 pairs (smallest side %.2f)",
                worst, smallest_side)};
}

Outcome spsa_oracle() {
    // One parameter: the central difference of a quadratic is exact.
    Rng rng = make_stream(9, Stream::Spsa);
    const ScalarObjective one = [](std::span<const double> t) { return 3.0 * t[0] * t[0] - t[0]; };
    const std::vector<double> t1{0.7};
    double single = 0.0;
    for (std::size_t k = 0; k < 10; ++k) {
        const double g = spsa_estimate(one, t1, k, {}, rng).gradient[0];
        single = std::max(single, std::abs(g - 3.2) / 3.2);
    }
    // Four parameters: f = ½θᵀAθ + bᵀθ.
    const std::vector<std::vector<double>> a{
        {2.0, 0.3, 0.0, 0.1}, {0.3, 1.5, 0.2, 0.0}, {0.0, 0.2, 1.0, 0.4}, {0.1, 0.0, 0.4, 3.0}};
    const std::vector<double> b{0.5, -1.0, 0.25, 0.0};
    const ScalarObjective quad = [&](std::span<const double> t) {
        double f = 0.0;
        for (std::size_t i = 0; i < 4; ++i) {
            f += b[i] * t[i];
            for (std::size_t j = 0; j < 4; ++j) {
                f += 0.5 * t[i] * a[i][j] * t[j];
            }
        }
        return f;
    };
    const std::vector<double> theta{0.4, -0.8, 1.2, 0.3};
    std::vector<double> exact(4);
    for (std::size_t i = 0; i < 4; ++i) {
        exact[i] = b[i];
        for (std::size_t j = 0; j < 4; ++j) {
            exact[i] += a[i][j] * theta[j];
        }
    }
    std::vector<double> mean(4, 0.0);
    for (std::size_t k = 0; k < 1000; ++k) {
        const auto g = spsa_estimate(quad, theta, k, {}, rng).gradient;
        for (std::size_t i = 0; i < 4; ++i) {
            mean[i] += g[i] / 1000.0;
        }
    }
    double err = 0.0;
    double ref = 0.0;
    for (std::size_t i = 0; i < 4; ++i) {
        err += (mean[i] - exact[i]) * (mean[i] - exact[i]);
        ref += exact[i] * exact[i];
    }
    const double rel = std::sqrt(err / ref);
    return {single < 1e-8 && rel < 0.02,
            fmt("1 parameter: max relative error %.1e; 4 parameters: relative error of the "
                "1000-draw mean %.2f%%",
                single, 100.0 * rel)};
}

std::string slurp(const std::filesystem::path &p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Outcome determinism() {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "equivar-acceptance";
    fs::remove_all(dir);
    fs::create_directories(dir);
    bool same = true;
    for (const char *run : {"first", "second"}) {
        const fs::path cfg = dir / (std::string(run) + ".ini");
        std::ofstream(cfg) << "[experiment]\nname = c2\n[train]\nseed = 1\n[output]\ndir = "
                           << (dir / run).string() << "\n";
        std::ostringstream out;
        std::ostringstream err;
        if (cli::cmd_run(cfg, out, err) != cli::kExitOk) {
            return {false, "run failed: " + err.str()};
        }
    }
    for (const char *file : {"loss.csv", "params.csv"}) {
        const auto a = slurp(dir / "first" / file);
        same = same && !a.empty() && a == slurp(dir / "second" / file);
    }
    return {same, same ? "loss.csv and params.csv byte-identical across two c2 runs"
                       : "outputs differ"};
}

Outcome loss_trend(const std::vector<std::pair<std::string, const std::vector<Run> *>> &all) {
    bool ok = true;
    std::string detail;
    for (const auto &[name, runs] : all) {
        const auto &rec = runs->front().record;
        const double ratio = rec.initial_val_loss / rec.val_loss.back();
        ok = ok && ratio >= 10.0;
        detail += fmt("%s%s x%.2g", detail.empty() ? "" : ", ", name.c_str(), ratio);
    }
    return {ok, "seed 1 initial/final validation loss: " + detail};
}

} // namespace

int main() {
    int failures = 0;
    auto report = [&](const char *id, const char *name, const Outcome &o) {
        std::printf("%s [%s] %s: %s\n", o.pass ? "PASS" : "FAIL", id, name, o.detail.c_str());
        std::fflush(stdout);
        failures += o.pass ? 0 : 1;
    };

    report("1", "twirl algebra", twirl_algebra());
    report("2", "line classifier invariance", line_invariance());
    report("3", "line classification", line_classification());

    const auto c2 = train_seeds(make_experiment("c2"));
    report("4", "C2 parameter pairing", paired_parameters(c2, 0.15, 120.0));
    const auto c2c2 = train_seeds(make_experiment("c2c2"));
    report("5", "C2xC2 parameter pairing", paired_parameters(c2c2, 0.25, 120.0));
    const auto d4 = train_seeds(make_experiment("d4"));
    report("6", "D4 orbit spread", d4_orbits(d4));
    const auto s6 = train_seeds(make_experiment("s6"));
    report("7", "S6 parameter convergence", s6_convergence(s6));

    report("8", "intertwining norm identity", intertwining_norms());
    report("9", "SPSA gradient", spsa_oracle());
    report("10", "determinism", determinism());
    report("T", "loss trend", loss_trend({{"c2", &c2}, {"c2c2", &c2c2}, {"d4", &d4}, {"s6", &s6}}));

    std::printf("%d criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
