#pragma once

#include "shimura/arith.hpp"
#include "shimura/atkinlehner.hpp"
#include "shimura/embeddings.hpp"
#include "shimura/error.hpp"
#include "shimura/fixtures.hpp"
#include "shimura/genus.hpp"
#include "shimura/localpoints.hpp"
#include "shimura/pipeline.hpp"
#include "shimura/quadorders.hpp"
#include "shimura/report.hpp"
