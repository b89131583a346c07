#pragma once

#include "ideals/hnf.hpp"
#include "ideals/ideal.hpp"
#include "ideals/order.hpp"
#include "ideals/prime.hpp"
