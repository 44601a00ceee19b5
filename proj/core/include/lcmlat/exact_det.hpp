#pragma once

#include "lcmlat/matrix.hpp"

namespace lcmlat {

/// Determinant by fraction-free (Bareiss) elimination with row pivoting.
/// Every intermediate division is exact.
Integer bareiss_determinant(IntegerMatrix m);

}  // namespace lcmlat
