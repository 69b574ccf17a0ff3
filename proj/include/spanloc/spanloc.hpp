#pragma once

#include "spanloc/cdelaunay.hpp"
#include "spanloc/geom.hpp"
#include "spanloc/graph.hpp"
#include "spanloc/pair_decomp.hpp"
#include "spanloc/spanners.hpp"
#include "spanloc/verify.hpp"
#include "spanloc/version.hpp"
