#pragma once

#include "flagsh/error.hpp"
#include "flagsh/labels.hpp"
#include "flagsh/graph.hpp"
#include "flagsh/cliques.hpp"
#include "flagsh/isomorphism.hpp"
#include "flagsh/verdict.hpp"
#include "flagsh/dismantling.hpp"
#include "flagsh/moves.hpp"
#include "flagsh/reduction.hpp"
#include "flagsh/i_contractibility.hpp"
#include "flagsh/complex.hpp"
#include "flagsh/collapse.hpp"
#include "flagsh/poset.hpp"
#include "flagsh/weak_points.hpp"
#include "flagsh/subdivision.hpp"
#include "flagsh/random.hpp"
#include "flagsh/corpus.hpp"
#include "flagsh/identities.hpp"
