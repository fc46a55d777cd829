#pragma once
#include <vector>

#include "modknot/laurent.hpp"
#include "modknot/words.hpp"

namespace modknot {

// Laurent polynomials in the braid variable t share the LaurentZ machinery.
using LaurentT = LaurentZ;

enum class BraidGen { S1, S1Inv, S2, S2Inv };
using BraidWord3 = std::vector<BraidGen>;

// Letterwise monoid morphism L -> s1^-1, R -> s2.
BraidWord3 braid_of(const Word& w);
BraidWord3 braid_of(const CyclicWord& a);

// Reduced Burau representation:
//   s1 -> [[-t,1],[0,1]], s2 -> [[1,0],[t,-t]], both of determinant -t.
MatLaurent burau(BraidGen g);
MatLaurent burau(const BraidWord3& b);

// Unique representative of the unit orbit {±t^k p}: valuation 0, positive
// constant term.  Zero stays zero.
LaurentT unit_normalized(const LaurentT& p);

// Alexander polynomial of the braid closure: det(Br(braid_of a) - Id)
// divided exactly by 1+t+t^2, then unit-normalized.  Parabolic classes give
// zero; the exactness of the division is asserted.
LaurentT alexander(const CyclicWord& a);

// Verifies that substituting q^2 = -t into
//   q^Rad (q^Rad - Tr(A_q) + q^-Rad)
// reproduces det(Br - Id) up to the same normalization.
bool fricke_alexander_check(const CyclicWord& a);

}  // namespace modknot
