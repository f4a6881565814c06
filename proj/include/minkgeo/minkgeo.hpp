#pragma once

// Umbrella header: plane geometry in Euclidean and Minkowski signature,
// conic chord calculus, inscribed-angle results, uniformly accelerated
// kinematics, figure generation, and the randomized verification batteries.

#include "minkgeo/numeric.hpp"
#include "minkgeo/vec2.hpp"
#include "minkgeo/metric.hpp"
#include "minkgeo/isometry.hpp"
#include "minkgeo/conics.hpp"
#include "minkgeo/theorems.hpp"
#include "minkgeo/kinematics.hpp"
#include "minkgeo/figures.hpp"
#include "minkgeo/verify.hpp"
