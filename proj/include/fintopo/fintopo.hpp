#pragma once

#include "fintopo/big_nat.hpp"
#include "fintopo/closed_graph.hpp"
#include "fintopo/dot_export.hpp"
#include "fintopo/errors.hpp"
#include "fintopo/fin_space.hpp"
#include "fintopo/json_io.hpp"
#include "fintopo/khalimsky.hpp"
#include "fintopo/partition.hpp"
#include "fintopo/point_set.hpp"
#include "fintopo/random_gen.hpp"
#include "fintopo/space_map.hpp"
