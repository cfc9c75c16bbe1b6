#pragma once

/// Umbrella header: the whole exact-arithmetic divisor-class calculator.

#include <stratadiv/classes.hpp>
#include <stratadiv/dejonquieres.hpp>
#include <stratadiv/divisor_class.hpp>
#include <stratadiv/error.hpp>
#include <stratadiv/integer.hpp>
#include <stratadiv/output.hpp>
#include <stratadiv/rational.hpp>
#include <stratadiv/signature.hpp>
#include <stratadiv/slope.hpp>
#include <stratadiv/test_curves.hpp>
#include <stratadiv/verify.hpp>
