#pragma once
#include <optional>
#include <string>
#include <vector>

#include "modknot/integers.hpp"
#include "modknot/words.hpp"

namespace modknot {

// Element of the modular group, stored as the normalized integer lift:
// trace > 0, or trace == 0 and lower-left entry > 0.
class MatZ {
  public:
    MatZ(Int a, Int b, Int c, Int d);  // throws unless det == 1
    static MatZ identity() { return MatZ(1, 0, 0, 1); }

    const Int& a() const { return a_; }
    const Int& b() const { return b_; }
    const Int& c() const { return c_; }
    const Int& d() const { return d_; }

    MatZ operator*(const MatZ& o) const;
    MatZ inverse() const;
    MatZ transposed() const;  // matrix transpose
    Int trace() const { return a_ + d_; }

    bool operator==(const MatZ& o) const;
    std::string str() const;  // "[[a,b],[c,d]]"

  private:
    Int a_, b_, c_, d_;
};

MatZ mat_L();  // [[1,0],[1,1]]
MatZ mat_R();  // [[1,1],[0,1]]
MatZ mat_S();  // [[0,-1],[1,0]]
MatZ mat_T();  // [[1,-1],[1,0]]

MatZ parse_matrix(const std::string& csv);  // "a,b,c,d"

MatZ word_to_matrix(const Word& w);
MatZ word_to_matrix(const CyclicWord& c);  // canonical representative

enum class ElType { Identity, Elliptic, Parabolic, Hyperbolic };
ElType classify(const MatZ& m);

// letters in the order-2 / order-3 free product presentation
enum class STGen { S, T, T2 };
using STWord = std::vector<STGen>;

std::string to_string(const STWord& w);
MatZ st_to_matrix(const STWord& w);

// Freely reduced S/T word representing m projectively.  Peels continued-fraction
// quotients off the columns: while the lower-left entry is nonzero, split off
// R^n S with n the nearest-integer quotient; the leftover power of R maps to
// (TS)^n or (ST^2)^n and the token string is then reduced in the free product.
STWord st_factor(const MatZ& m);

// Conjugacy class normal form.
struct ConjClass {
    enum class Kind { Identity, TorsionS, TorsionT, TorsionT2, Translation };
    Kind kind;
    std::optional<CyclicWord> cycle;  // set iff kind == Translation

    bool is_torsion() const { return kind != Kind::Translation && kind != Kind::Identity; }
    std::string str() const;
};

// Cyclically reduce st_factor(m).  Infinite-order classes come back as the
// cyclic {L,R}-word (parabolics as a single-letter power); torsion classes as tags.
ConjClass reduce_to_cycle(const MatZ& m);

// Combinatorial translation length: cycle length, 0 for torsion and identity.
int comb_len(const MatZ& m);

// sign(comb_len(AB) - comb_len(AB^-1)) for hyperbolic A, B whose tree-axes
// share an edge; throws std::domain_error when the difference vanishes.
int cosign_len(const MatZ& A, const MatZ& B);

// Hyperbolic translation length 2*acosh(|tr|/2); zero for the rest.
double geodesic_length(const MatZ& m);

}  // namespace modknot
