#pragma once

#include "shinlab/numerics/complex.hpp"
#include "shinlab/numerics/decimal.hpp"
#include "shinlab/numerics/errors.hpp"
#include "shinlab/numerics/guarded.hpp"
#include "shinlab/numerics/precision.hpp"
#include "shinlab/numerics/real.hpp"
