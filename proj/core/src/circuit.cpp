#include "modadd/circuit.hpp"

#include <algorithm>
#include <string>

namespace modadd {

const char* to_string(GateKind k) {
    switch (k) {
        case GateKind::NOT: return "NOT";
        case GateKind::CNOT: return "CNOT";
        case GateKind::TOFFOLI: return "TOFFOLI";
    }
    return "?";
}

std::size_t arity(GateKind k) { return static_cast<std::size_t>(k) + 1; }

const char* to_string(Role r) {
    switch (r) {
        case Role::input_a: return "input_a";
        case Role::input_b: return "input_b";
        case Role::carry: return "carry";
        case Role::propagate_ancilla: return "propagate_ancilla";
        case Role::sum: return "sum";
        case Role::zero_flag: return "zero_flag";
    }
    return "?";
}

Gate Gate::make(GateKind kind, std::initializer_list<Qubit> operands) {
    if (operands.size() != arity(kind))
        throw CircuitError(std::string(to_string(kind)) + ": expected " + std::to_string(arity(kind)) +
                           " operands, got " + std::to_string(operands.size()));
    Gate g;
    g.kind = kind;
    g.size = static_cast<std::uint8_t>(operands.size());
    std::copy(operands.begin(), operands.end(), g.q);
    for (std::size_t i = 0; i < g.size; ++i)
        for (std::size_t j = i + 1; j < g.size; ++j)
            if (g.q[i] == g.q[j]) throw CircuitError(std::string(to_string(kind)) + ": duplicate operand " + std::to_string(g.q[i]));
    return g;
}

bool Gate::operator==(const Gate& o) const {
    return kind == o.kind && size == o.size && std::equal(begin(), end(), o.begin());
}

const Register* RegisterLayout::find(const std::string& name) const {
    for (auto& r : registers)
        if (r.name == name) return &r;
    return nullptr;
}

const Register* RegisterLayout::first_with_role(Role role) const {
    for (auto& r : registers)
        if (r.role == role) return &r;
    return nullptr;
}

const Register& RegisterLayout::input_a() const {
    if (auto* r = first_with_role(Role::input_a)) return *r;
    throw CircuitError("layout has no input_a register");
}

const Register& RegisterLayout::input_b() const {
    if (auto* r = first_with_role(Role::input_b)) return *r;
    throw CircuitError("layout has no input_b register");
}

const Register& RegisterLayout::output() const {
    if (auto* r = first_with_role(Role::sum)) return *r;
    return input_b();
}

bool RegisterLayout::is_ancilla(Qubit q) const {
    for (auto& r : registers)
        if (std::find(r.qubits.begin(), r.qubits.end(), q) != r.qubits.end())
            return r.role != Role::input_a && r.role != Role::input_b && r.role != Role::sum;
    return true;
}

bool RegisterLayout::starts_early(Qubit q) const {
    for (auto& r : registers)
        if (std::find(r.qubits.begin(), r.qubits.end(), q) != r.qubits.end())
            return r.role == Role::input_a || r.role == Role::input_b || r.role == Role::sum;
    return false;
}

namespace {

void validate_layout(std::size_t width, const RegisterLayout& layout) {
    std::vector<int> owner(width, -1);
    for (std::size_t i = 0; i < layout.registers.size(); ++i) {
        auto& r = layout.registers[i];
        for (Qubit q : r.qubits) {
            if (q >= width)
                throw CircuitError("register '" + r.name + "': qubit " + std::to_string(q) + " out of range for width " +
                                   std::to_string(width));
            if (owner[q] >= 0)
                throw CircuitError("registers '" + layout.registers[owner[q]].name + "' and '" + r.name +
                                   "' overlap at qubit " + std::to_string(q));
            owner[q] = static_cast<int>(i);
        }
    }
    for (Qubit q : layout.initial_ones) {
        if (q >= width) throw CircuitError("initial one " + std::to_string(q) + " out of range");
        if (owner[q] < 0 || !layout.is_ancilla(q))
            throw CircuitError("initial one " + std::to_string(q) + " is not an ancilla");
    }
}

bool covered(const RegisterLayout& layout, Qubit q) {
    for (auto& r : layout.registers)
        if (std::find(r.qubits.begin(), r.qubits.end(), q) != r.qubits.end()) return true;
    return false;
}

}  // namespace

Circuit::Circuit(std::size_t width, RegisterLayout layout) : width_(width), layout_(std::move(layout)) {
    if (width_ == 0) throw CircuitError("circuit width must be positive");
    validate_layout(width_, layout_);
}

Circuit& Circuit::append(const Gate& g) {
    for (Qubit q : g) {
        if (q >= width_)
            throw CircuitError(std::string(to_string(g.kind)) + ": qubit " + std::to_string(q) + " out of range for width " +
                               std::to_string(width_));
        if (!covered(layout_, q)) throw CircuitError("qubit " + std::to_string(q) + " belongs to no register");
    }
    gates_.push_back(g);
    return *this;
}

Circuit& Circuit::barrier() {
    if (!gates_.empty() && (barriers_.empty() || barriers_.back() != gates_.size())) barriers_.push_back(gates_.size());
    return *this;
}

Circuit& Circuit::extend(const Circuit& other) {
    if (other.width_ != width_) throw CircuitError("extend: width mismatch");
    std::size_t bi = 0;
    for (std::size_t i = 0; i < other.gates_.size(); ++i) {
        if (bi < other.barriers_.size() && other.barriers_[bi] == i) {
            barrier();
            ++bi;
        }
        append(other.gates_[i]);
    }
    return *this;
}

Circuit new_circuit(std::size_t width, RegisterLayout layout) { return Circuit(width, std::move(layout)); }

Circuit invert(const Circuit& c) {
    Circuit r(c.width(), c.layout());
    auto b = c.barriers().rbegin();
    for (std::size_t i = c.size(); i-- > 0;) {
        if (b != c.barriers().rend() && *b == i + 1) {
            r.barrier();
            ++b;
        }
        r.append(c.gates()[i]);
    }
    return r;
}

Circuit concat(const Circuit& a, const Circuit& b) {
    Circuit r = a;
    r.extend(b);
    return r;
}

LayeredSchedule schedule_asap(const Circuit& c) {
    LayeredSchedule s;
    std::vector<std::size_t> next(c.width(), 0);  // first free layer per qubit
    s.layer_of.reserve(c.size());
    std::size_t bi = 0;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (bi < c.barriers().size() && c.barriers()[bi] == i) {
            std::fill(next.begin(), next.end(), *std::max_element(next.begin(), next.end()));
            ++bi;
        }
        auto& g = c.gates()[i];
        std::size_t l = 0;
        for (Qubit q : g) l = std::max(l, next[q]);
        for (Qubit q : g) next[q] = l + 1;
        if (l >= s.layers.size()) s.layers.resize(l + 1);
        s.layers[l].push_back(i);
        s.layer_of.push_back(l);
    }
    return s;
}

}  // namespace modadd
