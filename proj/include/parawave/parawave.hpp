#pragma once

#include "parawave/complex_matrix.hpp"
#include "parawave/dispersion.hpp"
#include "parawave/errors.hpp"
#include "parawave/gauss_peak.hpp"
#include "parawave/parareal.hpp"
#include "parawave/propagators.hpp"
#include "parawave/svd.hpp"
#include "parawave/symbols.hpp"
