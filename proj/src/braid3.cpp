#include "modknot/braid3.hpp"

#include <stdexcept>

#include "modknot/qdeform.hpp"

namespace modknot {

namespace {

LaurentT det_minus_id(const MatLaurent& m) {
    LaurentZ one(1);
    return (m.a - one) * (m.d - one) - m.b * m.c;
}

// both Alexander routes produce det(Br - Id) divisible by 1 + t + t^2;
// a failed division means the Burau convention drifted
LaurentT cyclotomic_quotient(const LaurentT& d) {
    LaurentT den = LaurentZ(1) + LaurentZ::var(1) + LaurentZ::var(2);
    auto quot = d.divided_exact(den);
    if (!quot) throw std::logic_error("convention mismatch");
    return *quot;
}

}  // namespace

BraidWord3 braid_of(const Word& w) {
    BraidWord3 b;
    b.reserve(w.size());
    for (Letter x : w) b.push_back(x == Letter::R ? BraidGen::S2 : BraidGen::S1Inv);
    return b;
}

BraidWord3 braid_of(const CyclicWord& a) { return braid_of(a.word()); }

MatLaurent burau(BraidGen g) {
    LaurentZ t = LaurentZ::var(1), ti = LaurentZ::var(-1), one(1), zero;
    switch (g) {
        case BraidGen::S1: return {-t, one, zero, one};
        case BraidGen::S1Inv: return {-ti, ti, zero, one};
        case BraidGen::S2: return {one, zero, t, -t};
        case BraidGen::S2Inv: return {one, zero, one, -ti};
    }
    throw std::invalid_argument("unknown braid generator");
}

MatLaurent burau(const BraidWord3& b) {
    MatLaurent m = MatLaurent::identity();
    for (BraidGen g : b) m = m * burau(g);
    return m;
}

LaurentT unit_normalized(const LaurentT& p) {
    if (p.is_zero()) return p;
    LaurentT q = p.shifted(-p.valuation());
    return q.coeff(0) < 0 ? -q : q;
}

LaurentT alexander(const CyclicWord& a) {
    return unit_normalized(cyclotomic_quotient(det_minus_id(burau(braid_of(a)))));
}

bool fricke_alexander_check(const CyclicWord& a) {
    if (!a.hyperbolic()) throw std::invalid_argument("fricke_alexander_check wants a hyperbolic class");
    const int r = a.rad();
    LaurentZ g = LaurentZ::var(2 * r) - LaurentZ::var(r) * fricke_trace(a) + LaurentZ(1);
    auto in_t = g.even_part_substitute();
    if (!in_t) throw std::logic_error("odd exponent in the Fricke substitution");
    return unit_normalized(cyclotomic_quotient(*in_t)) == alexander(a);
}

}  // namespace modknot
