#include "modknot/qdeform.hpp"

#include <stdexcept>

namespace modknot {

MatLaurent q_mat_L() {
    return {LaurentZ::var(1), LaurentZ(), LaurentZ(1), LaurentZ::var(-1)};
}

MatLaurent q_mat_R() {
    return {LaurentZ::var(1), LaurentZ(1), LaurentZ(), LaurentZ::var(-1)};
}

MatLaurent q_mat_S() {
    return {LaurentZ(), LaurentZ(-1), LaurentZ(1), LaurentZ()};
}

MatLaurent q_matrix(const Word& w) {
    MatLaurent m = MatLaurent::identity();
    for (Letter x : w) m = m * (x == Letter::L ? q_mat_L() : q_mat_R());
    return m;
}

MatLaurent q_deform(const MatZ& m) {
    // T = R S^-1, so T_q = R_q S^-1; S^-1 = -S is S projectively
    MatLaurent s = q_mat_S();
    MatLaurent t = q_mat_R() * s.inverse_det1();
    MatLaurent out = MatLaurent::identity();
    for (STGen g : st_factor(m))
        out = out * (g == STGen::S ? s : g == STGen::T ? t : t * t);
    return out;
}

LaurentZ fricke_trace(const CyclicWord& c) { return q_matrix(c.word()).trace(); }

LaurentZ disc_q(const CyclicWord& c) {
    LaurentZ tr = fricke_trace(c);
    return tr * tr - LaurentZ(4);
}

std::complex<double> CosPairSymbolic::eval(std::complex<double> q) const {
    return numer.eval(q) / std::sqrt(disc_x.eval(q) * disc_y.eval(q));
}

CosPairSymbolic cos_pair_symbolic(const MatLaurent& X, const MatLaurent& Y) {
    LaurentZ trx = X.trace(), try_ = Y.trace();
    LaurentZ dx = trx * trx - LaurentZ(4);
    LaurentZ dy = try_ * try_ - LaurentZ(4);
    LaurentZ numer = (X * Y).trace() - (X * Y.inverse_det1()).trace();
    Rat at2 = trx.eval_rational(2) * try_.eval_rational(2);
    if (at2 == 0) throw std::domain_error("sign factor undefined: trace product vanishes at q=2");
    if (at2 < 0) numer = -numer;
    return {numer, dx, dy};
}

std::complex<double> cos_pair_q(const MatLaurent& X, const MatLaurent& Y, std::complex<double> q) {
    if (!(X.det() == LaurentZ(1)) || !(Y.det() == LaurentZ(1)))
        throw std::invalid_argument("cos_pair_q wants determinant-1 matrices");
    return cos_pair_symbolic(X, Y).eval(q);
}

std::complex<double> cos_pair_q(const MatZ& A, const MatZ& B, std::complex<double> q) {
    return cos_pair_q(q_deform(A), q_deform(B), q);
}

Mat2c Mat2c::operator*(const Mat2c& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
}

Mat2c numeric_L(std::complex<double> q) { return {q, 0.0, 1.0, 1.0 / q}; }
Mat2c numeric_R(std::complex<double> q) { return {q, 1.0, 0.0, 1.0 / q}; }
Mat2c numeric_S() { return {0.0, -1.0, 1.0, 0.0}; }

Mat2c numeric_matrix(const Word& w, std::complex<double> q) {
    Mat2c m{1.0, 0.0, 0.0, 1.0};
    for (Letter x : w) m = m * (x == Letter::L ? numeric_L(q) : numeric_R(q));
    return m;
}

}  // namespace modknot
