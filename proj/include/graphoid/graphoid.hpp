#pragma once

// Umbrella header for the whole library.

#include "graphoid/axioms.hpp"
#include "graphoid/checks.hpp"
#include "graphoid/errors.hpp"
#include "graphoid/graph.hpp"
#include "graphoid/io.hpp"
#include "graphoid/model.hpp"
#include "graphoid/oracle.hpp"
#include "graphoid/protocol.hpp"
#include "graphoid/rng.hpp"
#include "graphoid/separation.hpp"
#include "graphoid/triplet.hpp"
#include "graphoid/universe.hpp"
#include "graphoid/varset.hpp"
