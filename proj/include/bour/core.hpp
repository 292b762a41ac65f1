#pragma once

#include "bour/core/calculus.hpp"
#include "bour/core/error.hpp"
#include "bour/core/gaussian.hpp"
#include "bour/core/gcd.hpp"
#include "bour/core/monomial.hpp"
#include "bour/core/poly_text.hpp"
#include "bour/core/polynomial.hpp"
#include "bour/core/rational.hpp"
#include "bour/core/rational_map.hpp"
#include "bour/core/registry.hpp"
