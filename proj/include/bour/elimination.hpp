#pragma once

#include "bour/elimination/field.hpp"
#include "bour/elimination/groebner_engine.hpp"
#include "bour/elimination/ideal.hpp"
#include "bour/elimination/implicitize.hpp"
#include "bour/elimination/modular.hpp"
#include "bour/elimination/resultant.hpp"
