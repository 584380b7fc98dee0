#ifndef THICKLAB_THICKLAB_HPP
#define THICKLAB_THICKLAB_HPP

#include "thicklab/bounds.hpp"
#include "thicklab/census.hpp"
#include "thicklab/construction.hpp"
#include "thicklab/embedding.hpp"
#include "thicklab/graph.hpp"
#include "thicklab/io.hpp"
#include "thicklab/planarity.hpp"
#include "thicklab/serialize.hpp"
#include "thicklab/solver.hpp"

#endif
