#pragma once

#include "curvedcs/basis.hpp"
#include "curvedcs/domain.hpp"
#include "curvedcs/error.hpp"
#include "curvedcs/error_analysis.hpp"
#include "curvedcs/field.hpp"
#include "curvedcs/operators.hpp"
