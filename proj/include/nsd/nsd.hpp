#pragma once

#include "nsd/errors.hpp"
#include "nsd/graph.hpp"
#include "nsd/generators.hpp"
#include "nsd/graph_io.hpp"
#include "nsd/coloring.hpp"
#include "nsd/verify.hpp"
#include "nsd/coloring_io.hpp"
#include "nsd/qm_base.hpp"
#include "nsd/exact_solver.hpp"
#include "nsd/fixtures.hpp"
#include "nsd/families.hpp"
#include "nsd/bipartite.hpp"
#include "nsd/bounded_degree.hpp"
#include "nsd/general_bounds.hpp"
#include "nsd/majority.hpp"
#include "nsd/theorems.hpp"
#include "nsd/dispatch.hpp"
