#pragma once

#include "multifold/alignment_solver.hpp"
#include "multifold/errors.hpp"
#include "multifold/fold_compiler.hpp"
#include "multifold/fold_simulator.hpp"
#include "multifold/geometry.hpp"
#include "multifold/horner.hpp"
#include "multifold/parse.hpp"
#include "multifold/poly.hpp"
#include "multifold/rational.hpp"
#include "multifold/reduction.hpp"
#include "multifold/resultant.hpp"
#include "multifold/sturm.hpp"
