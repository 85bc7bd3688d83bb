#pragma once

// Umbrella header. report.hpp (JSON) is left out so that nlohmann/json
// stays optional; include it explicitly when needed.

#include "certs.hpp"
#include "classify.hpp"
#include "error.hpp"
#include "exactnum.hpp"
#include "fixtures.hpp"
#include "graph.hpp"
#include "graph6.hpp"
#include "hom.hpp"
#include "matrix.hpp"
#include "params.hpp"
#include "solvers.hpp"
#include "vertex_set.hpp"
#include "verify.hpp"
