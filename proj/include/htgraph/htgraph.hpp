#pragma once

#include "htgraph/blowup.hpp"
#include "htgraph/canonical.hpp"
#include "htgraph/enumerate.hpp"
#include "htgraph/families.hpp"
#include "htgraph/graph.hpp"
#include "htgraph/graph6.hpp"
#include "htgraph/hamilton.hpp"
#include "htgraph/independence.hpp"
#include "htgraph/json.hpp"
#include "htgraph/search.hpp"
#include "htgraph/seed_search.hpp"
