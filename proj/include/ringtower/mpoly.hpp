#pragma once

#include "mpoly/mpoly.hpp"
#include "mpoly/heap.hpp"
#include "mpoly/pow.hpp"
#include "mpoly/gcd.hpp"
