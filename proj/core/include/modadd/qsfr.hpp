#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "modadd/builders.hpp"
#include "modadd/noise_sim.hpp"

namespace modadd {

// Frequency of the correct output over the frequency of the most frequent output.
double qsfr(const ShotHistogram& h, std::uint64_t correct);

// All outputs by descending count, ties by ascending output value.
std::vector<std::pair<std::uint64_t, std::uint64_t>> frequency_profile(const ShotHistogram& h);
std::string profile_csv(const std::vector<std::pair<std::uint64_t, std::uint64_t>>& profile);

struct QsfrRecord {
    std::uint64_t a = 0, b = 0, correct = 0, correct_freq = 0, top_output = 0, top_freq = 0;
    double qsfr = 0;
};

QsfrRecord make_record(std::uint64_t a, std::uint64_t b, std::uint64_t correct, const ShotHistogram& h);

struct QsfrReport {
    AdderVariant variant = AdderVariant::QCLMA;
    unsigned n = 0;
    bool stage_barriers = true;
    std::uint64_t shots = 0;
    std::uint64_t seed = 0;
    NoiseModel noise;
    std::vector<QsfrRecord> records;  // a-major order
    std::vector<double> per_a;
    double grand_mean = 0;
};

// Every in-range pair. threads = 0 picks the hardware concurrency; the result does not
// depend on the thread count.
QsfrReport run_sweep(const BuildSpec& spec, const NoiseModel& noise, std::uint64_t shots, std::uint64_t seed,
                     unsigned threads = 0);

// 100 * (a - b) / b.
double compare_means(double mean_a, double mean_b);
// Throws std::invalid_argument unless n, barrier setting, shots and noise agree.
double compare(const QsfrReport& a, const QsfrReport& b);

std::string to_csv(const QsfrReport& r);
std::string to_json(const QsfrReport& r);
// Reads the summary written by to_json (records are not part of it).
QsfrReport report_from_json(const std::string& text);

}  // namespace modadd
