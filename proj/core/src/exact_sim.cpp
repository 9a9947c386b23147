#include "modadd/exact_sim.hpp"

#include <algorithm>
#include <stdexcept>

#include "json.hpp"

namespace modadd {

std::uint64_t read_register(const BasisState& s, const Register& r) {
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < r.qubits.size() && i < 64; ++i) v |= std::uint64_t{s.at(r.qubits[i])} << i;
    return v;
}

void write_register(BasisState& s, const Register& r, std::uint64_t value) {
    if (r.qubits.size() < 64 && (value >> r.qubits.size()) != 0)
        throw std::out_of_range("value " + std::to_string(value) + " does not fit register '" + r.name + "'");
    for (std::size_t i = 0; i < r.qubits.size(); ++i) s.at(r.qubits[i]) = i < 64 ? (value >> i) & 1 : 0;
}

BasisState prepare(const Circuit& c, std::uint64_t a, std::uint64_t b) {
    BasisState s(c.width(), 0);
    for (Qubit q : c.layout().initial_ones) s[q] = 1;
    write_register(s, c.layout().input_a(), a);
    write_register(s, c.layout().input_b(), b);
    return s;
}

BasisState run_bits(const Circuit& c, BasisState s) {
    if (s.size() != c.width()) throw std::invalid_argument("state length does not match circuit width");
    for (auto& g : c.gates()) apply(g, s);
    return s;
}

BasisState run_basis(const Circuit& c, std::uint64_t a, std::uint64_t b) { return run_bits(c, prepare(c, a, b)); }

namespace {

using Lanes = std::vector<std::uint64_t>;

void run_lanes(const Circuit& c, Lanes& s) {
    for (auto& g : c.gates()) {
        switch (g.kind) {
            case GateKind::NOT: s[g.q[0]] = ~s[g.q[0]]; break;
            case GateKind::CNOT: s[g.q[1]] ^= s[g.q[0]]; break;
            case GateKind::TOFFOLI: s[g.q[2]] ^= s[g.q[0]] & s[g.q[1]]; break;
        }
    }
}

std::uint64_t lane_value(const Lanes& s, const Register& r, unsigned lane) {
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < r.qubits.size(); ++i) v |= ((s[r.qubits[i]] >> lane) & 1) << i;
    return v;
}

}  // namespace

VerificationReport exhaustive_verify(AdderVariant variant, unsigned n) {
    if (n < 2 || n > 12) throw std::out_of_range("exhaustive_verify supports 2 <= n <= 12");
    const Circuit c = build_adder({n, variant});
    const auto& L = c.layout();
    const Register& ra = L.input_a();
    const Register& rb = L.input_b();
    const Register& out = L.output();

    std::vector<Qubit> checked;  // ancillae that must come back to their initial value
    for (auto& r : L.registers)
        if (!r.retained && r.role != Role::input_a && r.role != Role::input_b && r.role != Role::sum)
            checked.insert(checked.end(), r.qubits.begin(), r.qubits.end());
    Lanes init(c.width(), 0);
    for (Qubit q : L.initial_ones) init[q] = ~std::uint64_t{0};

    VerificationReport rep;
    rep.variant = variant;
    rep.n = n;
    const std::uint64_t N = (std::uint64_t{1} << n) - 1;
    const std::uint64_t total = N * N;
    for (std::uint64_t base = 0; base < total; base += 64) {
        const unsigned lanes = static_cast<unsigned>(std::min<std::uint64_t>(64, total - base));
        Lanes s = init;
        for (unsigned l = 0; l < lanes; ++l) {
            const std::uint64_t a = (base + l) / N, b = (base + l) % N;
            for (std::size_t i = 0; i < n; ++i) {
                s[ra.qubits[i]] |= ((a >> i) & 1) << l;
                s[rb.qubits[i]] |= ((b >> i) & 1) << l;
            }
        }
        run_lanes(c, s);
        std::uint64_t bad_anc = 0;
        for (Qubit q : checked) bad_anc |= s[q] ^ init[q];
        for (unsigned l = 0; l < lanes; ++l) {
            const std::uint64_t a = (base + l) / N, b = (base + l) % N;
            const std::uint64_t want = modulo_sum_oracle(static_cast<std::int64_t>(a), static_cast<std::int64_t>(b), n);
            const std::uint64_t got = lane_value(s, out, l);
            if (got != want) {
                ++rep.mismatch_count;
                if (rep.mismatches.size() < 16) rep.mismatches.push_back({a, b, want, got});
            }
            if (lane_value(s, ra, l) != a) ++rep.input_preservation_violations;
            if ((bad_anc >> l) & 1) ++rep.ancilla_violations;
        }
        rep.pairs_tested += lanes;
    }
    return rep;
}

std::string to_json(const VerificationReport& r) {
    nlohmann::ordered_json j;
    j["variant"] = to_string(r.variant);
    j["n"] = r.n;
    j["pairs_tested"] = r.pairs_tested;
    j["mismatch_count"] = r.mismatch_count;
    auto& m = j["mismatches"] = nlohmann::ordered_json::array();
    for (auto& x : r.mismatches) m.push_back({{"a", x.a}, {"b", x.b}, {"expected", x.expected}, {"got", x.got}});
    j["ancilla_violations"] = r.ancilla_violations;
    j["input_preservation_violations"] = r.input_preservation_violations;
    return j.dump(2);
}

}  // namespace modadd
