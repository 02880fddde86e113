#pragma once

#include "canonical.hpp"
#include "census.hpp"
#include "constructions.hpp"
#include "enumeration.hpp"
#include "formulas.hpp"
#include "graph.hpp"
#include "graph6.hpp"
#include "report.hpp"
#include "search.hpp"
#include "standard_graphs.hpp"
#include "subgraph.hpp"
#include "suite.hpp"
