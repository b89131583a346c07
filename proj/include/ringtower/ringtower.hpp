#pragma once

// Everything in one include.

#include "balls.hpp"
#include "core/errors.hpp"
#include "core/random.hpp"
#include "core/ring.hpp"
#include "core/text.hpp"
#include "finite_field.hpp"
#include "fraction.hpp"
#include "ideals.hpp"
#include "integer.hpp"
#include "matrix.hpp"
#include "mpoly.hpp"
#include "nf/number_field.hpp"
#include "nmod_poly.hpp"
#include "poly.hpp"
#include "rational.hpp"
#include "residue.hpp"
#include "resultant.hpp"
#include "zmod.hpp"
