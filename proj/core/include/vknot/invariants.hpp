#pragma once

#include <cstdint>
#include <vector>

#include "vknot/gauss.hpp"
#include "vknot/laurent.hpp"

namespace vknot {

// Sum of all arrow signs.
int writhe(const GaussDiagram& d);

// Per-arrow crossing parity of a knot diagram: 1 when an odd number of
// endpoint tokens lie strictly between the arrow's two occurrences along
// the circle, else 0. Basepoint independent. Throws NotAKnotError on
// multi-circle input.
std::vector<std::uint8_t> parity(const GaussDiagram& d);

// Sum of the signs of the odd arrows of a knot diagram. Vanishes on
// every realizable (genus-0) diagram. Throws NotAKnotError.
int odd_writhe(const GaussDiagram& d);

// Symmetric 0/1 interlacement matrix of a knot diagram: entry (i,j) is 1
// iff chords i and j interleave. Row sums mod 2 equal parity(d).
std::vector<std::vector<std::uint8_t>> interlacement(const GaussDiagram& d);

inline constexpr int kDefaultStateSumCap = 24;

// Kauffman bracket by state sum over all 2^n smoothings:
//   sum over states of A^(#A - #B) * dd^(loops - 1),  dd = -A^2 - A^-2.
// The A-smoothing of an arrow reconnects its two endpoint neighborhoods
// respecting orientation when the sign is +, reversing it when the sign
// is -. Throws BudgetExceededError when n exceeds `state_cap`.
LaurentPoly bracket(const GaussDiagram& d, int state_cap = kDefaultStateSumCap);

// Writhe-normalized bracket (-A^3)^{-writhe} * bracket(d); invariant
// under the Virtual regime.
LaurentPoly f_polynomial(const GaussDiagram& d, int state_cap = kDefaultStateSumCap);

}  // namespace vknot
