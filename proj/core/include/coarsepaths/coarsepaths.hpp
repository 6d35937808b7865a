#pragma once

#include "coarsepaths/coarse.hpp"
#include "coarsepaths/cycles.hpp"
#include "coarsepaths/edge_set.hpp"
#include "coarsepaths/error.hpp"
#include "coarsepaths/generators.hpp"
#include "coarsepaths/graph.hpp"
#include "coarsepaths/graph_io.hpp"
#include "coarsepaths/parallel.hpp"
#include "coarsepaths/paths.hpp"
#include "coarsepaths/report.hpp"
#include "coarsepaths/witnesses.hpp"
