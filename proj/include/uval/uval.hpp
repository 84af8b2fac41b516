#pragma once

#include "bases.hpp"
#include "cache.hpp"
#include "cones.hpp"
#include "error.hpp"
#include "format.hpp"
#include "grassmann.hpp"
#include "json_io.hpp"
#include "kinematic.hpp"
#include "lefschetz.hpp"
#include "matrix.hpp"
#include "poly.hpp"
#include "scalar.hpp"
#include "selftest.hpp"
#include "valspec.hpp"
#include "valuation.hpp"
