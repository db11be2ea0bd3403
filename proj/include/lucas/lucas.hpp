#pragma once

/// Umbrella header for the lucastri library.

#include "lucas/aux_polynomial.hpp"
#include "lucas/oracle.hpp"
#include "lucas/parse.hpp"
#include "lucas/polynomial.hpp"
#include "lucas/rational.hpp"
#include "lucas/render.hpp"
#include "lucas/sequences.hpp"
#include "lucas/verify.hpp"
