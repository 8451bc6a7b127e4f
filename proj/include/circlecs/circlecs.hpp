#pragma once

#include "circlecs/angle.hpp"
#include "circlecs/complex_error.hpp"
#include "circlecs/fourier.hpp"
#include "circlecs/kinematics.hpp"
#include "circlecs/observables.hpp"
#include "circlecs/overlaps.hpp"
#include "circlecs/quadrature.hpp"
#include "circlecs/resolution.hpp"
#include "circlecs/wavefunction.hpp"
