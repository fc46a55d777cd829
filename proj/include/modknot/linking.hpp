#pragma once
#include <optional>
#include <utility>
#include <vector>

#include "modknot/modgroup.hpp"
#include "modknot/surd.hpp"
#include "modknot/words.hpp"

namespace modknot {

// One crossing of the (A, B) pair, indexed by the shifts that produce it.
// plus_side: the pair (sigma^i A, sigma^j B); otherwise (sigma^i A, S sigma^j B S^-1).
struct Crossing {
    int i = 0;  // 1..len(A)
    int j = 0;  // 1..len(B)
    bool plus_side = true;
    int sign = 0;  // orientation sign of the transversal intersection
};

// The two matrices whose axes realize a crossing.
std::pair<MatZ, MatZ> crossing_matrices(const CyclicWord& A, const CyclicWord& B, const Crossing& x);

// All crossings of the pair, plus side first, (i, j) lexicographic within each
// side.  Needs A, B hyperbolic and coprime; signs come from the exact
// quadratic-surd test on the realizing matrices.
std::vector<Crossing> enumerate_crossings(const CyclicWord& A, const CyclicWord& B);

// Linking via the shift/lexicographic crossing count (coprime pairs only).
long lk_shift(const CyclicWord& A, const CyclicWord& B);

// Linking via exact quadratic-surd geometry: counts crossing axis pairs
// through the base edge, weighting each hit by the inverse of the number of
// tree edges the two axes share, so that every intersection point of the two
// geodesics is counted exactly once.  Coprime pairs only.
long lk_oracle(const CyclicWord& A, const CyclicWord& B);

// Linking via pattern occurrences.  Defined for any hyperbolic pair; on
// powers of a common root it returns the framed self-linking convention
// m*n*lk(C,C).
long lk_slp(const CyclicWord& A, const CyclicWord& B);

// Dispatch: shift rule when coprime, pattern sum otherwise.
long lk(const CyclicWord& A, const CyclicWord& B);

// 2 * (lk(A,B) + lk(A, transpose(B))); counts both-side crossings.
long intersection_number(const CyclicWord& A, const CyclicWord& B);

// Linking difference functional lk(A,B) - lk(A, transpose(B)).
// A must be primitive; A = R (resp. L) returns +rad(B) (resp. -rad(B)).
// Computed twice (linking difference and pattern sum) and cross-checked.
long cos_a(const CyclicWord& A, const CyclicWord& B);

// First class X (by length, then lex) with lk(A,X) != lk(B,X), searching the
// hyperbolic primitive classes coprime to both, up to max_len.
std::optional<CyclicWord> link_equiv_witness(const CyclicWord& A, const CyclicWord& B, int max_len);

}  // namespace modknot
