#pragma once
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "modknot/integers.hpp"
#include "modknot/modgroup.hpp"
#include "modknot/words.hpp"

namespace modknot {

// P-asymmetry occ_P - occ_{transpose P}; changes sign when either the pattern
// or the class is transposed, and mas(R, a) is the Rademacher number of a.
long mas(const Word& p, const CyclicWord& a);

// whether a proper nonempty prefix of p equals a suffix of p
bool self_overlapping(const Word& p);

// A named conjugacy-invariant functional, evaluated on group elements through
// cyclic reduction; torsion and identity classes map to 0.
class Functional {
  public:
    static Functional rad();
    static Functional mas_of(const Word& p);         // p nonempty
    static Functional cos_of(const CyclicWord& a);   // a primitive
    static Functional parse(const std::string& spec);  // "rad" | "mas:WORD" | "cos:WORD"

    long eval(const CyclicWord& a) const;
    long eval(const MatZ& m) const;
    const std::string& name() const { return name_; }

  private:
    enum class Kind { Rad, Mas, Cos };
    Functional(Kind k, Word p, std::optional<CyclicWord> b, std::string n);

    Kind kind_;
    Word pattern_;
    std::optional<CyclicWord> base_;
    std::string name_;
};

struct DefectReport {
    long max_defect = 0;
    MatZ x = MatZ::identity();  // witnesses of the maximum
    MatZ y = MatZ::identity();
    int samples = 0;
};

// max |f(X) + f(Y) - f(XY)| over random pairs of generator products with
// lengths up to max_len; deterministic for a fixed seed.
DefectReport defect(const Functional& f, int samples, int max_len, std::uint64_t seed);

// The transposition-positive Lyndon classes of length <= m, by (length, lex):
// every functional that vanishes on torsion, is constant on conjugacy classes
// and changes sign under transposition is pinned down by its values here.
std::vector<CyclicWord> basis_classes(int m);

// rows[i][j] = functional_i(classes[j]); the mas rows use the canonical word
// of classes[i] as pattern, the cos rows use classes[i] as base (with the
// single-letter class acting as the Rademacher number on both sides)
struct BasisMatrices {
    std::vector<CyclicWord> classes;
    std::vector<std::vector<long>> mas_rows;
    std::vector<std::vector<long>> cos_rows;
};
BasisMatrices basis_matrices(int m);

// determinant by fraction-free elimination
Int matrix_det(const std::vector<std::vector<long>>& m);

enum class QmBasis { Mas, Cos };

// Exact coefficients c with sum_i c_i * row_i(classes[j]) = values[j]; throws
// std::logic_error when the basis matrix is singular.
std::vector<Rat> decompose(const std::vector<Rat>& values, int m, QmBasis basis);
std::vector<Rat> recombine(const std::vector<Rat>& coeffs, int m, QmBasis basis);

}  // namespace modknot
