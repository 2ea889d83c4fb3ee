#pragma once

#include "prfas/bench.hpp"
#include "prfas/generator.hpp"
#include "prfas/graph.hpp"
#include "prfas/heuristics.hpp"
#include "prfas/io.hpp"
#include "prfas/line_digraph.hpp"
#include "prfas/pagerank.hpp"
#include "prfas/scc.hpp"
#include "prfas/verify.hpp"
