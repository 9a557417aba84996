#pragma once

#include "shinlab/transforms/cm.hpp"
#include "shinlab/transforms/complex_shin.hpp"
#include "shinlab/transforms/density.hpp"
#include "shinlab/transforms/quadrature.hpp"
#include "shinlab/transforms/stieltjes.hpp"
