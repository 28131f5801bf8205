// spinstar.hpp — umbrella header

#pragma once

#include "spinstar/bloch.hpp"
#include "spinstar/correlations.hpp"
#include "spinstar/cumulants.hpp"
#include "spinstar/dawson.hpp"
#include "spinstar/dense.hpp"
#include "spinstar/exact.hpp"
#include "spinstar/figures.hpp"
#include "spinstar/io.hpp"
#include "spinstar/limit.hpp"
#include "spinstar/polynomial.hpp"
#include "spinstar/rational.hpp"
#include "spinstar/solvers.hpp"
#include "spinstar/spectrum.hpp"
#include "spinstar/svg.hpp"
#include "spinstar/trajectory.hpp"
#include "spinstar/verify.hpp"
