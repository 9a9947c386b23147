#include <cmath>
#include <fstream>

#include "doctest.h"
#include "modadd/modadd.hpp"

using namespace modadd;

TEST_CASE("noise config parsing") {
    auto m = parse_noise_model(R"({"p_not":0.001,"p_cnot":0.01,"p_toffoli":0.03,"p_idle":0.001,"p_meas":0.01})");
    CHECK(m == NoiseModel::reference());
    CHECK_THROWS_AS(parse_noise_model(R"({"p_not":0,"p_cnot":0,"p_toffoli":0,"p_idle":0,"p_meas":0,"p_x":0})"),
                    NoiseConfigError);
    CHECK_THROWS_AS(parse_noise_model(R"({"p_not":0,"p_cnot":0,"p_toffoli":0,"p_idle":0})"), NoiseConfigError);
    CHECK_THROWS_AS(parse_noise_model(R"({"p_not":2,"p_cnot":0,"p_toffoli":0,"p_idle":0,"p_meas":0})"),
                    NoiseConfigError);
    CHECK_THROWS_AS(parse_noise_model("not json"), NoiseConfigError);
    CHECK_THROWS_AS(load_noise_model("/nonexistent/noise.json"), NoiseConfigError);
    CHECK(parse_noise_model(to_json(NoiseModel::reference())) == NoiseModel::reference());
}

TEST_CASE("shipped reference config") {
    CHECK(load_noise_model(MODADD_SOURCE_DIR "/configs/reference_noise.json") == NoiseModel::reference());
}

TEST_CASE("substream mixing is the documented SplitMix64 chain") {
    // Published SplitMix64 sequence for state 0.
    SplitMix64 g(0);
    CHECK(g() == 0xE220A8397B1DCDAFull);
    CHECK(g() == 0x6E789E6AA1B965F4ull);
    CHECK(mix64(0) == 0xE220A8397B1DCDAFull);
    CHECK(shot_key(1, 2, 3, 4) == mix64(mix64(mix64(mix64(1) ^ 2) ^ 3) ^ 4));
    CHECK(shot_key(1, 2, 3, 4) != shot_key(1, 2, 3, 5));
    SplitMix64 h(42);
    for (int i = 0; i < 100; ++i) {
        CHECK_FALSE(h.bernoulli(0.0));
        CHECK(h.bernoulli(1.0));
    }
}

TEST_CASE("zero noise reproduces the exact result") {
    for (auto v : {AdderVariant::QCLMA, AdderVariant::KIM_QRCA}) {
        auto c = build_adder({4, v});
        NoisyRunner r(c);
        for (std::uint64_t a = 0; a < 15; ++a)
            for (std::uint64_t b = 0; b < 15; ++b) {
                auto h = r.run(a, b, NoiseModel::zero(), 64, 1);
                const auto want = read_register(run_basis(c, a, b), c.layout().output());
                CHECK(h.counts[want] == 64);
            }
    }
}

TEST_CASE("readout-only noise flips every bit") {
    NoiseModel m;
    m.p_meas = 1;
    auto h = run_noisy_shots(build_adder({4, AdderVariant::QCLMA}), 10, 2, m, 1024, 5);
    CHECK(h.counts[3] == 1024);
}

TEST_CASE("histograms are normalized and deterministic") {
    auto c = build_adder({4, AdderVariant::KIM_QRCA});
    auto h1 = run_noisy_shots(c, 3, 9, NoiseModel::reference().scaled(5), 500, 11);
    auto h2 = run_noisy_shots(c, 3, 9, NoiseModel::reference().scaled(5), 500, 11);
    auto h3 = run_noisy_shots(c, 3, 9, NoiseModel::reference().scaled(5), 500, 12);
    std::uint64_t total = 0;
    for (auto x : h1.counts) total += x;
    CHECK(total == 500);
    CHECK(h1.counts == h2.counts);
    CHECK(h1.counts != h3.counts);
}

TEST_CASE("argument checks") {
    auto c = build_adder({4, AdderVariant::QCLMA});
    CHECK_THROWS_AS(run_noisy_shots(c, 1, 1, NoiseModel::zero(), 0, 0), std::invalid_argument);
    NoiseModel bad;
    bad.p_idle = -0.1;
    CHECK_THROWS_AS(run_noisy_shots(c, 1, 1, bad, 1, 0), NoiseConfigError);
    CHECK_THROWS_AS(run_noisy_shots(c, 15, 1, NoiseModel::zero(), 1, 0), std::out_of_range);
}

TEST_CASE("a runner is reusable") {
    auto c = build_adder({4, AdderVariant::QCLMA});
    auto m = NoiseModel::reference().scaled(10);
    NoisyRunner r(c);
    auto h100 = r.run(6, 7, m, 100, 3);
    auto h100b = r.run(6, 7, m, 100, 3);
    CHECK(h100.counts == h100b.counts);
}

TEST_CASE("correct-output frequency does not grow with noise") {
    auto c = build_adder({4, AdderVariant::KIM_QRCA});
    NoisyRunner r(c);
    const std::uint64_t shots = 10000;
    const auto want = modulo_sum_oracle(10, 2, 4);
    double prev = 1.0;
    for (double t : {0.0, 0.5, 1.0}) {
        auto h = r.run(10, 2, NoiseModel::reference().scaled(t), shots, 99);
        const double f = static_cast<double>(h.counts[want]) / shots;
        const double sigma = std::sqrt(std::max(f * (1 - f), 1e-4) / shots);
        CHECK(f <= prev + 2 * sigma);
        prev = f;
    }
}
