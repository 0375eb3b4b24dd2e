#pragma once

#include "graphidx/edge_list.hpp"
#include "graphidx/error.hpp"
#include "graphidx/generators.hpp"
#include "graphidx/graph.hpp"
#include "graphidx/indices.hpp"
#include "graphidx/montecarlo.hpp"
#include "graphidx/oracles.hpp"
#include "graphidx/rng.hpp"
