#ifndef SKEWRANK_SKEWRANK_HPP
#define SKEWRANK_SKEWRANK_HPP

#include "skewrank/blocks.hpp"
#include "skewrank/classify.hpp"
#include "skewrank/compress.hpp"
#include "skewrank/generators.hpp"
#include "skewrank/graph.hpp"
#include "skewrank/graph_io.hpp"
#include "skewrank/int_matrix.hpp"
#include "skewrank/invariants.hpp"
#include "skewrank/matching.hpp"
#include "skewrank/reduction.hpp"
#include "skewrank/suite.hpp"

#endif  // SKEWRANK_SKEWRANK_HPP
