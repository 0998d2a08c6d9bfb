#pragma once

#include <vector>

#include "royroot/specfun.hpp"

namespace royroot {

// Determinant of a square matrix given in SignedLog form, row-major.
// Each row is scaled by its max-magnitude entry (logs accumulated outside),
// the scaled matrix is LU-factored with partial pivoting, and the result is
// reassembled as a SignedLog. Entries may span hundreds of orders of
// magnitude; the scaled LU sees only O(1) numbers.
SignedLog signed_log_det(const std::vector<SignedLog>& entries, int size);

}  // namespace royroot
