#pragma once

#include "bour/surfaces/curvature.hpp"
#include "bour/surfaces/curve.hpp"
#include "bour/surfaces/index.hpp"
#include "bour/surfaces/integral_free.hpp"
#include "bour/surfaces/plane_curves.hpp"
#include "bour/surfaces/ribaucour.hpp"
#include "bour/surfaces/surface.hpp"
#include "bour/surfaces/tangential.hpp"
