#pragma once

// Umbrella header for the max-times rating library core. IO (maxtimes/io.hpp)
// and the CLI (maxtimes/cli.hpp) are separate on purpose: they depend on
// vendored third-party headers that pure algebra consumers should not need.

#include "maxtimes/errors.hpp"
#include "maxtimes/rational.hpp"
#include "maxtimes/radical.hpp"
#include "maxtimes/scalar.hpp"
#include "maxtimes/matrix.hpp"
#include "maxtimes/solvers.hpp"
#include "maxtimes/rating.hpp"
#include "maxtimes/oracle.hpp"
