#pragma once

#include "emax/bounds.hpp"
#include "emax/constructions.hpp"
#include "emax/embedding.hpp"
#include "emax/embedding_io.hpp"
#include "emax/error.hpp"
#include "emax/graph.hpp"
#include "emax/log2_linear.hpp"
#include "emax/planarity.hpp"
#include "emax/rational.hpp"
#include "emax/surgery.hpp"
