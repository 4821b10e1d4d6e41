#ifndef LERS_LERS_HPP
#define LERS_LERS_HPP

#include "chain.hpp"
#include "dualgraph.hpp"
#include "graph.hpp"
#include "homology.hpp"
#include "io.hpp"
#include "lattice.hpp"
#include "oracle.hpp"
#include "rng.hpp"
#include "stats.hpp"
#include "surface.hpp"
#include "sweep.hpp"
#include "ust.hpp"
#include "verify.hpp"

#endif
