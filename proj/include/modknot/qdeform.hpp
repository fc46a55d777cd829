#pragma once
#include <complex>

#include "modknot/laurent.hpp"
#include "modknot/modgroup.hpp"
#include "modknot/words.hpp"

namespace modknot {

// One-parameter deformation of the two parabolic generators:
//   L_q = [[q,0],[1,1/q]],  R_q = [[q,1],[0,1/q]],  S unchanged.
MatLaurent q_mat_L();
MatLaurent q_mat_R();
MatLaurent q_mat_S();

MatLaurent q_matrix(const Word& w);

// Deformation of an arbitrary element through its S/T factorization.
// Well defined up to an overall sign (the lift of the 2-3 torsion is not unique).
MatLaurent q_deform(const MatZ& m);

// Trace of the deformed canonical representative: a reciprocal Laurent
// polynomial of degree len for any class.
LaurentZ fricke_trace(const CyclicWord& c);

LaurentZ disc_q(const CyclicWord& c);  // fricke_trace^2 - 4

// cos of the angle/distance between the deformed axes:
//   sign * (Tr(XY) - Tr(XY^-1)) / sqrt(disc(X) disc(Y))
// with the principal square root of the discriminant product and the constant
// sign factor fixed by exact rational evaluation of Tr(X)Tr(Y) at q = 2.
std::complex<double> cos_pair_q(const MatLaurent& X, const MatLaurent& Y, std::complex<double> q);
std::complex<double> cos_pair_q(const MatZ& A, const MatZ& B, std::complex<double> q);

// The inputs to cos_pair_q, precomputed symbolically.
struct CosPairSymbolic {
    LaurentZ numer;   // sign * (Tr(XY) - Tr(XY^-1))
    LaurentZ disc_x;  // Tr(X)^2 - 4
    LaurentZ disc_y;
    std::complex<double> eval(std::complex<double> q) const;
};
CosPairSymbolic cos_pair_symbolic(const MatLaurent& X, const MatLaurent& Y);

// Numeric 2x2 complex matrices for the fully numeric evaluation route.
struct Mat2c {
    std::complex<double> a, b, c, d;
    Mat2c operator*(const Mat2c& o) const;
    std::complex<double> trace() const { return a + d; }
    Mat2c inverse_det1() const { return {d, -b, -c, a}; }
};
Mat2c numeric_L(std::complex<double> q);
Mat2c numeric_R(std::complex<double> q);
Mat2c numeric_S();
Mat2c numeric_matrix(const Word& w, std::complex<double> q);

}  // namespace modknot
