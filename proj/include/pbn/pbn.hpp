#pragma once

#include "bn_numerics.hpp"
#include "errors.hpp"
#include "lagrangian_engine.hpp"
#include "limit_series.hpp"
#include "pbn_formulas.hpp"
#include "rational.hpp"
#include "theta_ring.hpp"
#include "verification.hpp"
