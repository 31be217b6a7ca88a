#pragma once

// Umbrella header: exact dominance-order combinatorics, Schur polynomial
// calculus in Chern-class variables, and the longest-chain lower bound B.

#include "errors.hpp"
#include "partition.hpp"
#include "poset.hpp"
#include "schur.hpp"
#include "bounds.hpp"
#include "serialize.hpp"
