#pragma once

#include "bpsdt/bps.hpp"
#include "bpsdt/correspondence.hpp"
#include "bpsdt/errors.hpp"
#include "bpsdt/number_theory.hpp"
#include "bpsdt/pipeline.hpp"
#include "bpsdt/quiver_dt.hpp"
#include "bpsdt/rational.hpp"
#include "bpsdt/series.hpp"
