#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "modadd/circuit.hpp"

namespace modadd {

enum class AdderVariant : std::uint8_t { QCLMA, KIM_QRCA };

const char* to_string(AdderVariant v);
// Accepts "qclma" and "qrca" / "kim_qrca" (case-insensitive).
std::optional<AdderVariant> parse_variant(const std::string& s);

struct BuildSpec {
    unsigned n = 4;
    AdderVariant variant = AdderVariant::QCLMA;
    // Barrier between consecutive sub-modules (carry generator, set-zero, truncated adder).
    bool stage_barriers = true;
};

// (a + b) mod (2^n - 1) over the single-zero range [0, 2^n - 2].
std::uint64_t modulo_sum_oracle(std::int64_t a, std::int64_t b, unsigned n);

// Ripple carry generator. Registers a, b, c (c[0] is the carry-in, caller supplied),
// carry_out. Leaves a and b intact and c[1..n-1] cleared; carry_out = carry of a+b+c[0].
Circuit build_qrca_carry_generator(unsigned n);

// In-place ripple adder: b <- (a + b + c[0]) mod 2^n. No gate writes a carry at position n.
Circuit build_qrca_truncated_adder(unsigned n);

// Prefix-tree carry generator. c[0] starts in |1> (initial one); c[n] receives the carry
// of a + b + c[0]. a and b are restored, the propagate pool is uncomputed, and
// c[1..n-1] keep block generate bits (retained outputs).
Circuit build_cla_carry_generator(unsigned n);

// In-place prefix-tree adder: b <- (a + b + cin) mod 2^n; carries k and pool restored.
Circuit build_cla_inplace_truncated_adder(unsigned n);

struct AdderStage {
    std::string name;  // carry_generator, set_zero or truncated_adder
    Circuit circuit;   // full-width, shares the adder's layout
};

// The adder as consecutive segments; their concatenation is build_adder(spec).
std::vector<AdderStage> adder_stages(const BuildSpec& spec);

// Full two-stage modulo (2^n - 1) adder; result in input_b.
// Gates are identical with and without stage barriers; only depth and scheduling differ.
Circuit build_adder(const BuildSpec& spec);

}  // namespace modadd
