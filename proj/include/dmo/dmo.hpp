// dmo.hpp — umbrella header

#pragma once

#include "dmo/hilbert.hpp"
#include "dmo/mapping.hpp"
#include "dmo/hamiltonian.hpp"
#include "dmo/dynamics.hpp"
#include "dmo/observables.hpp"
#include "dmo/oracle.hpp"
#include "dmo/scenario.hpp"
#include "dmo/io.hpp"
#include "dmo/selftest.hpp"
