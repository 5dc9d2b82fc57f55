#pragma once

#include "certificate.hpp"
#include "chains.hpp"
#include "construction.hpp"
#include "counters.hpp"
#include "dfs.hpp"
#include "edge3.hpp"
#include "graph.hpp"
#include "intervals.hpp"
#include "io.hpp"
#include "oracle.hpp"
#include "transforms.hpp"
#include "verifier.hpp"
