#pragma once

#include "matrix/matrix.hpp"
#include "matrix/charpoly.hpp"
#include "matrix/det.hpp"
#include "matrix/minpoly.hpp"
