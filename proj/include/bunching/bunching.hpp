#pragma once

#include "bunching/analytic.hpp"
#include "bunching/config.hpp"
#include "bunching/convergence.hpp"
#include "bunching/csv.hpp"
#include "bunching/detector.hpp"
#include "bunching/figures.hpp"
#include "bunching/joint.hpp"
#include "bunching/quadrature.hpp"
#include "bunching/scan.hpp"
#include "bunching/spwf.hpp"
