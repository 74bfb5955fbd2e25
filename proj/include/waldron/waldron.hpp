#pragma once

// Umbrella header: the whole library.

#include "waldron/analysis.hpp"
#include "waldron/baryweights.hpp"
#include "waldron/basis.hpp"
#include "waldron/concentric.hpp"
#include "waldron/errors.hpp"
#include "waldron/golden.hpp"
#include "waldron/interp.hpp"
#include "waldron/io.hpp"
#include "waldron/multi_index.hpp"
#include "waldron/nelder_mead.hpp"
#include "waldron/parallel.hpp"
#include "waldron/points.hpp"
#include "waldron/simplex.hpp"
#include "waldron/weights.hpp"
