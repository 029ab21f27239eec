/**
 * @file contfrac.hpp
 * @brief Hirzebruch-Jung continued fractions and modular inverses.
 *
 * The expansion r/a = [b_1,...,b_k] uses the "minus" convention
 * r/a = b_1 - 1/(b_2 - 1/(...)), which is the one whose coefficients give the
 * self-intersections -b_i of the minimal resolution chain of 1/r(1,a).
 * All b_i are >= 2.
 */
#pragma once

#include "stablepair/rational.hpp"

#include <utility>
#include <vector>

namespace stablepair {

// Expansion of r/a. Requires gcd(a,r) = 1 and 1 <= a < r; the smooth case
// r = a = 1 yields the empty expansion.
std::vector<Int> hj_expand(const Int& r, const Int& a);

// Inverse of hj_expand: evaluates a nonempty expansion (entries >= 2) to the
// coprime pair (r, a).
std::pair<Int, Int> hj_eval(const std::vector<Int>& coefficients);

// Inverse of a modulo r, in [1, r-1]. Requires r >= 2 and gcd(a,r) = 1.
Int mod_inverse(const Int& a, const Int& r);

}  // namespace stablepair
