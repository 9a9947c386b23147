#include "modadd/noise_sim.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "modadd/metrics.hpp"

namespace modadd {

namespace {
const char* const kKeys[] = {"p_not", "p_cnot", "p_toffoli", "p_idle", "p_meas"};
}

NoiseModel NoiseModel::scaled(double t) const {
    return {p_not * t, p_cnot * t, p_toffoli * t, p_idle * t, p_meas * t};
}

void NoiseModel::validate() const {
    const double v[] = {p_not, p_cnot, p_toffoli, p_idle, p_meas};
    for (int i = 0; i < 5; ++i)
        if (!(v[i] >= 0.0 && v[i] <= 1.0))
            throw NoiseConfigError(std::string(kKeys[i]) + " = " + std::to_string(v[i]) + " is outside [0, 1]");
}

NoiseModel parse_noise_model(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw NoiseConfigError(std::string("noise config is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw NoiseConfigError("noise config must be a JSON object");
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool known = false;
        for (auto* k : kKeys) known |= it.key() == k;
        if (!known) throw NoiseConfigError("unknown noise config key '" + it.key() + "'");
        if (!it.value().is_number()) throw NoiseConfigError("noise config key '" + it.key() + "' must be a number");
    }
    NoiseModel m;
    double* dst[] = {&m.p_not, &m.p_cnot, &m.p_toffoli, &m.p_idle, &m.p_meas};
    for (int i = 0; i < 5; ++i) {
        if (!j.contains(kKeys[i])) throw NoiseConfigError(std::string("noise config is missing '") + kKeys[i] + "'");
        *dst[i] = j[kKeys[i]].get<double>();
    }
    m.validate();
    return m;
}

NoiseModel load_noise_model(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw NoiseConfigError("cannot read noise config '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_noise_model(ss.str());
}

std::string to_json(const NoiseModel& m) {
    nlohmann::ordered_json j;
    j["p_not"] = m.p_not;
    j["p_cnot"] = m.p_cnot;
    j["p_toffoli"] = m.p_toffoli;
    j["p_idle"] = m.p_idle;
    j["p_meas"] = m.p_meas;
    return j.dump();
}

NoisyRunner::NoisyRunner(const Circuit& c)
    : c_(c), sched_(schedule_asap(c)), idle_(idle_per_layer(c, sched_)), out_(c.layout().output().qubits) {
    if (out_.size() > 24) throw std::invalid_argument("output register too wide for a histogram");
}

ShotHistogram NoisyRunner::run(std::uint64_t a, std::uint64_t b, const NoiseModel& noise, std::uint64_t shots,
                               std::uint64_t seed) const {
    if (shots == 0) throw std::invalid_argument("shots must be positive");
    noise.validate();
    const std::uint64_t N = (std::uint64_t{1} << c_.layout().input_a().qubits.size()) - 1;
    if (a >= N || b >= N) throw std::out_of_range("inputs must lie in [0, 2^n - 2]");
    const BasisState init = prepare(c_, a, b);
    const auto& gates = c_.gates();
    ShotHistogram h;
    h.shots = shots;
    h.counts.assign(std::size_t{1} << out_.size(), 0);
    BasisState s;
    for (std::uint64_t shot = 0; shot < shots; ++shot) {
        SplitMix64 rng(shot_key(seed, a, b, shot));
        s = init;
        for (std::size_t l = 0; l < sched_.depth(); ++l) {
            for (std::size_t gi : sched_.layers[l]) {
                const Gate& g = gates[gi];
                apply(g, s);
                const double p = noise.gate(g.kind);
                for (Qubit q : g) s[q] ^= rng.bernoulli(p);
            }
            for (Qubit q : idle_[l]) s[q] ^= rng.bernoulli(noise.p_idle);
        }
        std::uint64_t v = 0;
        for (std::size_t i = 0; i < out_.size(); ++i) {
            const unsigned bit = s[out_[i]] ^ rng.bernoulli(noise.p_meas);
            v |= std::uint64_t{bit} << i;
        }
        ++h.counts[v];
    }
    return h;
}

ShotHistogram run_noisy_shots(const Circuit& c, std::uint64_t a, std::uint64_t b, const NoiseModel& noise,
                              std::uint64_t shots, std::uint64_t seed) {
    return NoisyRunner(c).run(a, b, noise, shots, seed);
}

}  // namespace modadd
