#pragma once

#include "error.hpp"
#include "numeric.hpp"
#include "nu_parametric.hpp"
#include "potentials.hpp"
#include "spectrum.hpp"
#include "jacobi.hpp"
#include "quadrature.hpp"
#include "wavefunction.hpp"
#include "oracle.hpp"
#include "reference_tables.hpp"
#include "emit.hpp"
#include "config.hpp"
#include "commands.hpp"
