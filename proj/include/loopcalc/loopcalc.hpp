#pragma once

#include "loopcalc/integer.hpp"
#include "loopcalc/error.hpp"
#include "loopcalc/algebra.hpp"
#include "loopcalc/model.hpp"
#include "loopcalc/tensor.hpp"
#include "loopcalc/coproduct.hpp"
#include "loopcalc/surface.hpp"
#include "loopcalc/tqft.hpp"
#include "loopcalc/builtin.hpp"
#include "loopcalc/format.hpp"
#include "loopcalc/expr.hpp"
#include "loopcalc/model_file.hpp"
#include "loopcalc/checks.hpp"
