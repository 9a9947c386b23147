#pragma once

#include "modadd/builders.hpp"
#include "modadd/circuit.hpp"
#include "modadd/exact_sim.hpp"
#include "modadd/metrics.hpp"
#include "modadd/noise_sim.hpp"
#include "modadd/qasm.hpp"
#include "modadd/qsfr.hpp"
