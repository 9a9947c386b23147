#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace modadd {

using Qubit = std::uint32_t;

enum class GateKind : std::uint8_t { NOT, CNOT, TOFFOLI };

const char* to_string(GateKind k);
std::size_t arity(GateKind k);

class CircuitError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Operands are stored target-last: NOT(t), CNOT(c, t), TOFFOLI(c1, c2, t).
struct Gate {
    GateKind kind = GateKind::NOT;
    std::uint8_t size = 0;
    Qubit q[3] = {0, 0, 0};

    static Gate make(GateKind kind, std::initializer_list<Qubit> operands);
    static Gate x(Qubit t) { return make(GateKind::NOT, {t}); }
    static Gate cx(Qubit c, Qubit t) { return make(GateKind::CNOT, {c, t}); }
    static Gate ccx(Qubit c1, Qubit c2, Qubit t) { return make(GateKind::TOFFOLI, {c1, c2, t}); }

    Qubit target() const { return q[size - 1]; }
    const Qubit* begin() const { return q; }
    const Qubit* end() const { return q + size; }

    bool operator==(const Gate& o) const;
};

enum class Role : std::uint8_t { input_a, input_b, carry, propagate_ancilla, sum, zero_flag };

const char* to_string(Role r);

struct Register {
    std::string name;
    Role role = Role::carry;
    std::vector<Qubit> qubits;
    // Designated output: excluded from the ancilla-restoration check.
    bool retained = false;
};

struct RegisterLayout {
    std::vector<Register> registers;
    std::vector<Qubit> initial_ones;

    const Register* find(const std::string& name) const;
    const Register* first_with_role(Role r) const;
    const Register& input_a() const;
    const Register& input_b() const;
    // Measured register: the sum register when present, else input_b (in-place adders).
    const Register& output() const;

    bool is_ancilla(Qubit q) const;
    bool starts_early(Qubit q) const;  // inputs and sum exist from layer 0
};

class Circuit {
public:
    Circuit(std::size_t width, RegisterLayout layout);

    std::size_t width() const { return width_; }
    const std::vector<Gate>& gates() const { return gates_; }
    const RegisterLayout& layout() const { return layout_; }
    std::size_t size() const { return gates_.size(); }
    // Sorted gate positions p > 0 where every gate at index >= p depends on
    // every gate before p (a barrier across all qubits).
    const std::vector<std::size_t>& barriers() const { return barriers_; }

    Circuit& append(const Gate& g);
    Circuit& x(Qubit t) { return append(Gate::x(t)); }
    Circuit& cx(Qubit c, Qubit t) { return append(Gate::cx(c, t)); }
    Circuit& ccx(Qubit c1, Qubit c2, Qubit t) { return append(Gate::ccx(c1, c2, t)); }
    // Barrier after the current last gate; no-op on an empty circuit or a repeated call.
    Circuit& barrier();
    // Appends every gate and barrier of other (same width) in order.
    Circuit& extend(const Circuit& other);

private:
    std::size_t width_;
    std::vector<Gate> gates_;
    std::vector<std::size_t> barriers_;
    RegisterLayout layout_;
};

Circuit new_circuit(std::size_t width, RegisterLayout layout);
// Gates reversed; barrier positions mirrored.
Circuit invert(const Circuit& c);
// Gates of a then gates of b, layout of a.
Circuit concat(const Circuit& a, const Circuit& b);

struct LayeredSchedule {
    std::vector<std::vector<std::size_t>> layers;
    std::vector<std::size_t> layer_of;
    std::size_t depth() const { return layers.size(); }
};

LayeredSchedule schedule_asap(const Circuit& c);

}  // namespace modadd
