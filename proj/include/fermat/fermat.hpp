#pragma once

#include "fermat/core.hpp"
#include "fermat/curve.hpp"
#include "fermat/emit.hpp"
#include "fermat/error.hpp"
#include "fermat/oracle.hpp"
#include "fermat/quadrature.hpp"
#include "fermat/sampling.hpp"
#include "fermat/types.hpp"
