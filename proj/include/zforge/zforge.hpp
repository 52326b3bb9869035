#pragma once

#include "zforge/analysis.hpp"
#include "zforge/compile.hpp"
#include "zforge/dot.hpp"
#include "zforge/engine.hpp"
#include "zforge/errors.hpp"
#include "zforge/formula.hpp"
#include "zforge/gadget.hpp"
#include "zforge/gadget_search.hpp"
#include "zforge/graph.hpp"
#include "zforge/harness.hpp"
#include "zforge/json_io.hpp"
#include "zforge/minzfs.hpp"
#include "zforge/netlist.hpp"
