#pragma once

// Umbrella header.

#include "nstep/bigint.hpp"
#include "nstep/construction.hpp"
#include "nstep/determinant.hpp"
#include "nstep/errors.hpp"
#include "nstep/identities.hpp"
#include "nstep/matrix.hpp"
#include "nstep/report.hpp"
#include "nstep/sequence.hpp"
#include "nstep/sweep.hpp"
