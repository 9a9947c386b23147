#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "modadd/builders.hpp"
#include "modadd/circuit.hpp"

namespace modadd {

// One classical bit per qubit.
using BasisState = std::vector<std::uint8_t>;

inline void apply(const Gate& g, BasisState& s) {
    switch (g.kind) {
        case GateKind::NOT: s[g.q[0]] ^= 1; break;
        case GateKind::CNOT: s[g.q[1]] ^= s[g.q[0]]; break;
        case GateKind::TOFFOLI: s[g.q[2]] ^= s[g.q[0]] & s[g.q[1]]; break;
    }
}

std::uint64_t read_register(const BasisState& s, const Register& r);
void write_register(BasisState& s, const Register& r, std::uint64_t value);

// Layout initial values (initial_ones) plus a and b loaded little-endian.
BasisState prepare(const Circuit& c, std::uint64_t a, std::uint64_t b);
// Runs the gates over an arbitrary starting bit pattern.
BasisState run_bits(const Circuit& c, BasisState s);
BasisState run_basis(const Circuit& c, std::uint64_t a, std::uint64_t b);

struct Mismatch {
    std::uint64_t a, b, expected, got;
};

struct VerificationReport {
    AdderVariant variant = AdderVariant::QCLMA;
    unsigned n = 0;
    std::uint64_t pairs_tested = 0;
    std::uint64_t mismatch_count = 0;
    std::vector<Mismatch> mismatches;  // first few only
    std::uint64_t ancilla_violations = 0;
    std::uint64_t input_preservation_violations = 0;

    bool ok() const { return mismatch_count == 0 && ancilla_violations == 0 && input_preservation_violations == 0; }
};

// Every in-range (a, b) for 2 <= n <= 12. Runs 64 input pairs per pass, one per bit lane.
VerificationReport exhaustive_verify(AdderVariant variant, unsigned n);

std::string to_json(const VerificationReport& r);

}  // namespace modadd
