#pragma once

#include "fusionkit/bounds.hpp"
#include "fusionkit/error.hpp"

#include "fusionkit/group/catalog.hpp"
#include "fusionkit/group/group_io.hpp"
#include "fusionkit/group/group_table.hpp"
#include "fusionkit/group/homomorphisms.hpp"
#include "fusionkit/group/permutation.hpp"
#include "fusionkit/group/structure.hpp"
#include "fusionkit/group/subgroups.hpp"

#include "fusionkit/fusion/alperin.hpp"
#include "fusionkit/fusion/classification.hpp"
#include "fusionkit/fusion/dump.hpp"
#include "fusionkit/fusion/focal.hpp"
#include "fusionkit/fusion/lattice.hpp"
#include "fusionkit/fusion/local.hpp"
#include "fusionkit/fusion/quotient.hpp"
#include "fusionkit/fusion/saturation.hpp"
#include "fusionkit/fusion/system.hpp"

#include "fusionkit/classify/census.hpp"
#include "fusionkit/classify/constrained.hpp"
#include "fusionkit/classify/sparseness.hpp"
#include "fusionkit/classify/theorem_suite.hpp"

#include "fusionkit/dot.hpp"
