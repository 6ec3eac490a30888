#pragma once

//! Umbrella header: the whole library in one include.

#include "covox/covariant_oscillator.hpp"
#include "covox/errors.hpp"
#include "covox/format.hpp"
#include "covox/little_group.hpp"
#include "covox/observables.hpp"
#include "covox/run_config.hpp"
#include "covox/special_functions.hpp"
#include "covox/wave_grid.hpp"
