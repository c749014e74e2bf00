#pragma once

#include "abcore/anderson.hpp"
#include "abcore/errors.hpp"
#include "abcore/gap_poset.hpp"
#include "abcore/generating_functions.hpp"
#include "abcore/isomorphism.hpp"
#include "abcore/numeric.hpp"
#include "abcore/partition.hpp"
#include "abcore/recursions.hpp"
#include "abcore/series.hpp"
#include "abcore/statistics.hpp"
