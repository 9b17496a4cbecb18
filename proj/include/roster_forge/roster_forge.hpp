#pragma once

#include "roster_forge/model.hpp"
#include "roster_forge/cost.hpp"
#include "roster_forge/solver.hpp"
#include "roster_forge/oracle.hpp"
#include "roster_forge/io.hpp"
#include "roster_forge/config.hpp"
#include "roster_forge/benchmarks.hpp"
#include "roster_forge/generator.hpp"
