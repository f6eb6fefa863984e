#pragma once

// Exact group inverses of matrices whose digraphs are simple symmetric and
// pendant-dominated, computed three independent ways: entrywise from
// maximum matchings and alternating cycle chains, blockwise from the
// branch decomposition, and algebraically by full-rank factorization.

#include "dginv/chains.hpp"
#include "dginv/classification.hpp"
#include "dginv/digraph.hpp"
#include "dginv/errors.hpp"
#include "dginv/generators.hpp"
#include "dginv/group_inverse.hpp"
#include "dginv/linalg.hpp"
#include "dginv/matching.hpp"
#include "dginv/matrix.hpp"
#include "dginv/matrix_io.hpp"
#include "dginv/rational.hpp"
#include "dginv/structure.hpp"
#include "dginv/sweep.hpp"
