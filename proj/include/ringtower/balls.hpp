#pragma once

#include "balls/ball.hpp"
#include "balls/mpfr.hpp"
#include "balls/roots.hpp"
#include "balls/torsion.hpp"
