#pragma once

#include "catenary.hpp"
#include "checked.hpp"
#include "diophantine.hpp"
#include "error.hpp"
#include "fibers.hpp"
#include "invariants.hpp"
#include "limits.hpp"
#include "parse.hpp"
#include "rational.hpp"
#include "semigroup.hpp"
#include "toric.hpp"
#include "vec.hpp"
#include "version.hpp"
