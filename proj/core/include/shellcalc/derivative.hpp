#pragma once

#include <string>

#include "shellcalc/expr.hpp"

namespace shellcalc {

/// Explicit partial derivative of `e` with respect to the symbol `s`: every
/// other symbol is treated as a constant. A symbol absent from `e` yields 0.
/// The result is passed through the light simplifier.
Expr diff_explicit(const Expr& e, const std::string& s);

}  // namespace shellcalc
