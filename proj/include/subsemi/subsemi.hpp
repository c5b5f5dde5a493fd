#pragma once

#include "closure.hpp"
#include "construction_spec.hpp"
#include "constructions.hpp"
#include "element_set.hpp"
#include "enumeration.hpp"
#include "error.hpp"
#include "free_band.hpp"
#include "harness.hpp"
#include "mul_table.hpp"
#include "semigroup.hpp"
#include "sgt_io.hpp"
