#ifndef CHANALLOC_CHANALLOC_HPP_
#define CHANALLOC_CHANALLOC_HPP_

// Umbrella header.

#include "chanalloc/bench.hpp"
#include "chanalloc/brute_force.hpp"
#include "chanalloc/channel_model.hpp"
#include "chanalloc/config.hpp"
#include "chanalloc/fixtures.hpp"
#include "chanalloc/geometry.hpp"
#include "chanalloc/matrix.hpp"
#include "chanalloc/pareto.hpp"
#include "chanalloc/problem.hpp"
#include "chanalloc/rng.hpp"
#include "chanalloc/serialize.hpp"
#include "chanalloc/solver.hpp"
#include "chanalloc/topology.hpp"

#endif // CHANALLOC_CHANALLOC_HPP_
