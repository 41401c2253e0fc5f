#pragma once

// Everything at once.

#include "kwk/error.hpp"
#include "kwk/rational.hpp"
#include "kwk/qmatrix.hpp"
#include "kwk/qpoly.hpp"
#include "kwk/pencil.hpp"
#include "kwk/kronecker.hpp"
#include "kwk/polynomial.hpp"
#include "kwk/ringmodel.hpp"
#include "kwk/invariants.hpp"
#include "kwk/filtration.hpp"
#include "kwk/homology.hpp"
#include "kwk/json_io.hpp"
#include "kwk/cli.hpp"
