#pragma once

#include "diracrose/datafile.hpp"
#include "diracrose/ensemble.hpp"
#include "diracrose/errors.hpp"
#include "diracrose/predictions.hpp"
#include "diracrose/rng.hpp"
#include "diracrose/sampling.hpp"
#include "diracrose/secular.hpp"
#include "diracrose/special.hpp"
#include "diracrose/statistics.hpp"
#include "diracrose/version.hpp"
