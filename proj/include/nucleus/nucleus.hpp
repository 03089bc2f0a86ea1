#pragma once

#include "nucleus/bucket_queue.hpp"
#include "nucleus/cliques.hpp"
#include "nucleus/common.hpp"
#include "nucleus/decompose.hpp"
#include "nucleus/forest.hpp"
#include "nucleus/gen.hpp"
#include "nucleus/graph.hpp"
#include "nucleus/metrics.hpp"
#include "nucleus/oracle.hpp"
