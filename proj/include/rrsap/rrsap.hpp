#pragma once

// Umbrella header.
//
// f(n) is the maximum length among arithmetic progressions contained in the
// least reduced residue system A(n) = {0 < a < n : gcd(a, n) = 1}. The
// library computes f(n) exactly, produces constructive witnesses, evaluates
// the closed-form bound sandwich, and derives progression-length thresholds.

#include "rrsap/arith.hpp"
#include "rrsap/bounds.hpp"
#include "rrsap/bounds_core.hpp"
#include "rrsap/constructions.hpp"
#include "rrsap/oracle.hpp"
#include "rrsap/parallel.hpp"
#include "rrsap/records.hpp"
#include "rrsap/residue_system.hpp"
#include "rrsap/search.hpp"
#include "rrsap/threshold.hpp"
#include "rrsap/witness.hpp"
