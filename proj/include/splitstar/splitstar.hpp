#pragma once

// Umbrella header for the split-star network library.  The command-line
// front end lives in cli.hpp and is kept out of here because it pulls in
// the vendored CLI11 and JSON headers.

#include "splitstar/base_tables.hpp"
#include "splitstar/cover.hpp"
#include "splitstar/cycle.hpp"
#include "splitstar/dcc.hpp"
#include "splitstar/error.hpp"
#include "splitstar/hamilton.hpp"
#include "splitstar/permutation.hpp"
#include "splitstar/smallgraph.hpp"
#include "splitstar/subnet_cycles.hpp"
#include "splitstar/topology.hpp"
#include "splitstar/verify.hpp"
