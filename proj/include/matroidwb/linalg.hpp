#pragma once

#include <optional>
#include <vector>

#include "matroidwb/rational.hpp"

namespace matroidwb {

using RationalMatrix = std::vector<std::vector<Rational>>;

Rational determinant(RationalMatrix a);

// Exact positive-semidefiniteness by symmetric elimination: a zero pivot must
// come with a zero row, a negative pivot refutes.
bool is_psd_exact(const RationalMatrix& a);

// Some x >= 0 with A x = b, found by an exact phase-one simplex with Bland's
// rule, or nothing if the system is infeasible.
std::optional<std::vector<Rational>> nonnegative_solution(const RationalMatrix& a, const std::vector<Rational>& b);

}  // namespace matroidwb
