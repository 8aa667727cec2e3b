#pragma once

#include "pmonoid/action.hpp"
#include "pmonoid/errors.hpp"
#include "pmonoid/exterior.hpp"
#include "pmonoid/hinge.hpp"
#include "pmonoid/limits.hpp"
#include "pmonoid/matrix.hpp"
#include "pmonoid/monoid.hpp"
#include "pmonoid/numeric.hpp"
#include "pmonoid/scalar.hpp"
#include "pmonoid/subspace.hpp"
