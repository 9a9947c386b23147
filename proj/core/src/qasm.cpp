#include "modadd/qasm.hpp"

#include <sstream>

namespace modadd {

namespace {

std::vector<Qubit> measured(const Circuit& c) {
    const auto& L = c.layout();
    if (auto* r = L.first_with_role(Role::sum)) return r->qubits;
    if (auto* r = L.first_with_role(Role::input_b)) return r->qubits;
    std::vector<Qubit> all(c.width());
    for (Qubit q = 0; q < c.width(); ++q) all[q] = q;
    return all;
}

}  // namespace

std::string to_qasm(const Circuit& c) {
    const auto m = measured(c);
    std::ostringstream os;
    os << "OPENQASM 2.0;\n"
       << "include \"qelib1.inc\";\n"
       << "qreg q[" << c.width() << "];\n"
       << "creg c[" << m.size() << "];\n";
    for (Qubit q : c.layout().initial_ones) os << "x q[" << q << "];\n";
    std::size_t bi = 0;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (bi < c.barriers().size() && c.barriers()[bi] == i) {
            os << "barrier q;\n";
            ++bi;
        }
        auto& g = c.gates()[i];
        switch (g.kind) {
            case GateKind::NOT: os << "x q[" << g.q[0] << "];\n"; break;
            case GateKind::CNOT: os << "cx q[" << g.q[0] << "],q[" << g.q[1] << "];\n"; break;
            case GateKind::TOFFOLI: os << "ccx q[" << g.q[0] << "],q[" << g.q[1] << "],q[" << g.q[2] << "];\n"; break;
        }
    }
    for (std::size_t i = 0; i < m.size(); ++i) os << "measure q[" << m[i] << "] -> c[" << i << "];\n";
    return os.str();
}

}  // namespace modadd
