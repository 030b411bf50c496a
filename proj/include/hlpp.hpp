#pragma once

// Convenience umbrella: the whole library in one include.

#include "hlpp/numeric.hpp"
#include "hlpp/poly.hpp"
#include "hlpp/series.hpp"
#include "hlpp/qseries.hpp"
#include "hlpp/partition.hpp"
#include "hlpp/plane_partition.hpp"
#include "hlpp/transfer.hpp"
#include "hlpp/linalg.hpp"
#include "hlpp/multipoly.hpp"
#include "hlpp/symkp.hpp"
#include "hlpp/serialize.hpp"
