#pragma once

#include "elocc/cli.hpp"
#include "elocc/convertibility.hpp"
#include "elocc/errors.hpp"
#include "elocc/filters.hpp"
#include "elocc/generator.hpp"
#include "elocc/json_io.hpp"
#include "elocc/metrics.hpp"
#include "elocc/prob_vector.hpp"
#include "elocc/protocol.hpp"
#include "elocc/rational.hpp"
#include "elocc/search.hpp"
