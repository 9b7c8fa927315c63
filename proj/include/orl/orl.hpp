#pragma once

#include "orl/bitset.hpp"
#include "orl/closure.hpp"
#include "orl/construction.hpp"
#include "orl/embedding.hpp"
#include "orl/errors.hpp"
#include "orl/expander.hpp"
#include "orl/graph.hpp"
#include "orl/homogeneous.hpp"
#include "orl/ogf.hpp"
#include "orl/oracles.hpp"
#include "orl/patterns.hpp"
#include "orl/qeh.hpp"
#include "orl/rational.hpp"
#include "orl/report.hpp"
#include "orl/rng.hpp"
