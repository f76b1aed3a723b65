#pragma once

// Umbrella header.

#include "coxsys/arcs.hpp"
#include "coxsys/asymptotics.hpp"
#include "coxsys/ball.hpp"
#include "coxsys/congruence.hpp"
#include "coxsys/coxeter_matrix.hpp"
#include "coxsys/hexagon.hpp"
#include "coxsys/loop_reduce.hpp"
#include "coxsys/norm_checks.hpp"
#include "coxsys/reduce.hpp"
#include "coxsys/schreier.hpp"
#include "coxsys/surface.hpp"
#include "coxsys/tits.hpp"
