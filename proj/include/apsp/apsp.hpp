#pragma once

#include "apsp/bench.hpp"
#include "apsp/error.hpp"
#include "apsp/ext_cost.hpp"
#include "apsp/graph.hpp"
#include "apsp/graphgen.hpp"
#include "apsp/matrix.hpp"
#include "apsp/minplus.hpp"
#include "apsp/oracle.hpp"
#include "apsp/parallel.hpp"
#include "apsp/paths.hpp"
#include "apsp/plot.hpp"
#include "apsp/solvers.hpp"
#include "apsp/text_io.hpp"
