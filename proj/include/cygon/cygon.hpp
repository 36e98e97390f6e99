#pragma once

#include "cygon/arboricity.hpp"
#include "cygon/certificates.hpp"
#include "cygon/cli.hpp"
#include "cygon/density.hpp"
#include "cygon/error.hpp"
#include "cygon/graph.hpp"
#include "cygon/io.hpp"
#include "cygon/mappings.hpp"
#include "cygon/matroid.hpp"
#include "cygon/orderings.hpp"
#include "cygon/push_engine.hpp"
#include "cygon/rational.hpp"
#include "cygon/subset.hpp"
#include "cygon/verify.hpp"
