#pragma once

#include "symprod/integer.hpp"
#include "symprod/linalg.hpp"
#include "symprod/algebra_core.hpp"
#include "symprod/homology_ring.hpp"
#include "symprod/cohomology_ring.hpp"
#include "symprod/duality.hpp"
#include "symprod/invariants.hpp"
#include "symprod/oracle.hpp"
