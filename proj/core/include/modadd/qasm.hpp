#pragma once

#include <string>

#include "modadd/circuit.hpp"

namespace modadd {

// OpenQASM 2.0 text: one qreg, a creg sized to the measured register, initial ones as
// leading x lines, gates in circuit order, then measurements. The measured register is
// the sum register, else input_b, else every qubit.
std::string to_qasm(const Circuit& c);

}  // namespace modadd
