#pragma once

#include "tamefiber/arith.hpp"
#include "tamefiber/cyclotomic.hpp"
#include "tamefiber/error.hpp"
#include "tamefiber/fiber_config.hpp"
#include "tamefiber/io.hpp"
#include "tamefiber/kodaira_type.hpp"
#include "tamefiber/monodromy_zeta.hpp"
#include "tamefiber/rational_points.hpp"
#include "tamefiber/surgery.hpp"
#include "tamefiber/tameness.hpp"
#include "tamefiber/trace_formula.hpp"
