#pragma once

// Umbrella header: the whole library.

#include "alliances/alliance.hpp"
#include "alliances/catalog.hpp"
#include "alliances/direct.hpp"
#include "alliances/edge_list.hpp"
#include "alliances/error.hpp"
#include "alliances/families.hpp"
#include "alliances/graph.hpp"
#include "alliances/harness.hpp"
#include "alliances/int_set.hpp"
#include "alliances/json_io.hpp"
#include "alliances/solver.hpp"
#include "alliances/vertex_set.hpp"
