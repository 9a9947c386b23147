#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "modadd/circuit.hpp"
#include "modadd/exact_sim.hpp"

namespace modadd {

class NoiseConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct NoiseModel {
    double p_not = 0, p_cnot = 0, p_toffoli = 0, p_idle = 0, p_meas = 0;

    static NoiseModel zero() { return {}; }
    static NoiseModel reference() { return {0.001, 0.01, 0.03, 0.001, 0.01}; }

    double gate(GateKind k) const { return k == GateKind::NOT ? p_not : k == GateKind::CNOT ? p_cnot : p_toffoli; }
    NoiseModel scaled(double t) const;
    // Throws NoiseConfigError if any probability lies outside [0, 1].
    void validate() const;
    bool operator==(const NoiseModel&) const = default;
};

// Flat JSON object with exactly the five probability keys.
NoiseModel parse_noise_model(const std::string& json_text);
NoiseModel load_noise_model(const std::string& path);
std::string to_json(const NoiseModel& m);

// SplitMix64 output function.
constexpr std::uint64_t mix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

// Starting state of the generator for one shot.
constexpr std::uint64_t shot_key(std::uint64_t seed, std::uint64_t a, std::uint64_t b, std::uint64_t shot) {
    return mix64(mix64(mix64(mix64(seed) ^ a) ^ b) ^ shot);
}

class SplitMix64 {
public:
    using result_type = std::uint64_t;
    explicit SplitMix64(std::uint64_t state) : s_(state) {}
    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }
    result_type operator()() {
        std::uint64_t z = (s_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }
    // One uniform in [0, 1) from the top 53 bits; true when below p.
    bool bernoulli(double p) { return static_cast<double>((*this)() >> 11) * 0x1.0p-53 < p; }

private:
    std::uint64_t s_;
};

struct ShotHistogram {
    std::uint64_t shots = 0;
    std::vector<std::uint64_t> counts;  // indexed by output value, size 2^bits
};

// Schedule and idle sets are computed once and reused for every input pair.
class NoisyRunner {
public:
    explicit NoisyRunner(const Circuit& c);
    ShotHistogram run(std::uint64_t a, std::uint64_t b, const NoiseModel& noise, std::uint64_t shots,
                      std::uint64_t seed) const;
    const Circuit& circuit() const { return c_; }

private:
    Circuit c_;
    LayeredSchedule sched_;
    std::vector<std::vector<Qubit>> idle_;
    std::vector<Qubit> out_;
};

ShotHistogram run_noisy_shots(const Circuit& c, std::uint64_t a, std::uint64_t b, const NoiseModel& noise,
                              std::uint64_t shots, std::uint64_t seed);

}  // namespace modadd
