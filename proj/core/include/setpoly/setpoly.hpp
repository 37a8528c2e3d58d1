#pragma once

#include "setpoly/coloring.hpp"
#include "setpoly/errors.hpp"
#include "setpoly/finite_sets.hpp"
#include "setpoly/int_vec.hpp"
#include "setpoly/json_io.hpp"
#include "setpoly/nc_polynomial.hpp"
#include "setpoly/polymap.hpp"
#include "setpoly/ramsey.hpp"
#include "setpoly/recurrence.hpp"
#include "setpoly/set_polynomial.hpp"
#include "setpoly/system_pet.hpp"
