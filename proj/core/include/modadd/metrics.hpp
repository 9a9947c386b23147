#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "modadd/builders.hpp"
#include "modadd/circuit.hpp"

namespace modadd {

struct ResourceReport {
    std::size_t not_count = 0;
    std::size_t cnot_count = 0;
    std::size_t toffoli_count = 0;
    // Upper end when only an interval is known (predictions); equals toffoli_count otherwise.
    std::size_t toffoli_count_hi = 0;
    std::size_t cnot_depth = 0;
    std::size_t toffoli_depth = 0;
    std::size_t total_depth = 0;
    std::size_t qubits = 0;
    std::vector<std::size_t> idle;  // per qubit; empty for predictions

    std::size_t gate_count() const { return not_count + cnot_count + toffoli_count; }
    std::size_t max_idle() const;
    std::size_t total_idle() const;
};

unsigned hamming_weight(std::uint64_t n);
unsigned floor_log2(std::uint64_t n);

// Longest dependency chain counting only gates of `kind`.
std::size_t type_depth(const Circuit& c, GateKind kind);

// Idle qubits of each schedule layer: inside the qubit's activity window but untouched.
// The window opens at layer 0 for input and sum qubits, at first touch otherwise.
std::vector<std::vector<Qubit>> idle_per_layer(const Circuit& c, const LayeredSchedule& s);

ResourceReport analyze(const Circuit& c);
ResourceReport predicted_resources(AdderVariant variant, unsigned n);

// Flat "key value" lines.
std::string to_kv(const ResourceReport& r);
std::string to_json(const ResourceReport& r);

struct ConformanceItem {
    std::string metric;
    std::size_t built = 0;
    std::size_t lo = 0, hi = 0;  // accepted closed interval
    bool ok() const { return built >= lo && built <= hi; }
};

struct ConformanceReport {
    AdderVariant variant = AdderVariant::QCLMA;
    unsigned n = 0;
    std::vector<ConformanceItem> items;
    bool ok() const;
};

// Built circuit against the closed-form predictions. Toffoli depth for QCLMA is pinned
// to the predicted value at n = 4 and otherwise accepted between the component sum
// 2L + 2L' + 5 and the total 3L + 2L' + 5 (L = floor_log2(n), L' = floor_log2(n - 1)).
ConformanceReport conformance(const BuildSpec& spec);

std::string to_json(const ConformanceReport& r);

}  // namespace modadd
