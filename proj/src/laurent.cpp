#include "modknot/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace modknot {

LaurentZ::LaurentZ(Int constant) {
    if (constant != 0) c_[0] = std::move(constant);
}

LaurentZ LaurentZ::monomial(Int coeff, int exp) {
    LaurentZ p;
    if (coeff != 0) p.c_[exp] = std::move(coeff);
    return p;
}

void LaurentZ::trim() {
    for (auto it = c_.begin(); it != c_.end();)
        it = (it->second == 0) ? c_.erase(it) : std::next(it);
}

int LaurentZ::degree() const {
    if (c_.empty()) throw std::domain_error("degree of zero polynomial");
    return c_.rbegin()->first;
}

int LaurentZ::valuation() const {
    if (c_.empty()) throw std::domain_error("valuation of zero polynomial");
    return c_.begin()->first;
}

Int LaurentZ::coeff(int e) const {
    auto it = c_.find(e);
    return it == c_.end() ? Int(0) : it->second;
}

LaurentZ LaurentZ::operator+(const LaurentZ& o) const {
    LaurentZ out = *this;
    for (auto& [e, v] : o.c_) out.c_[e] += v;
    out.trim();
    return out;
}

LaurentZ LaurentZ::operator-(const LaurentZ& o) const {
    LaurentZ out = *this;
    for (auto& [e, v] : o.c_) out.c_[e] -= v;
    out.trim();
    return out;
}

LaurentZ LaurentZ::operator-() const {
    LaurentZ out = *this;
    for (auto& [e, v] : out.c_) v = -v;
    return out;
}

LaurentZ LaurentZ::operator*(const LaurentZ& o) const {
    LaurentZ out;
    for (auto& [e1, v1] : c_)
        for (auto& [e2, v2] : o.c_) out.c_[e1 + e2] += v1 * v2;
    out.trim();
    return out;
}

LaurentZ LaurentZ::pow(int n) const {
    if (n < 0) throw std::invalid_argument("pow wants n >= 0");
    LaurentZ out(1);
    for (int i = 0; i < n; ++i) out *= *this;
    return out;
}

LaurentZ LaurentZ::shifted(int k) const {
    LaurentZ out;
    for (auto& [e, v] : c_) out.c_[e + k] = v;
    return out;
}

LaurentZ LaurentZ::inverted_var() const {
    LaurentZ out;
    for (auto& [e, v] : c_) out.c_[-e] = v;
    return out;
}

std::optional<LaurentZ> LaurentZ::divided_exact(const LaurentZ& d) const {
    if (d.is_zero()) throw std::invalid_argument("division by zero polynomial");
    if (is_zero()) return LaurentZ();
    // align both at valuation zero and long-divide from the top
    LaurentZ num = shifted(-valuation());
    LaurentZ den = d.shifted(-d.valuation());
    int shift = valuation() - d.valuation();
    const Int& lead = den.c_.rbegin()->second;
    LaurentZ q;
    while (!num.is_zero() && num.degree() >= den.degree()) {
        const Int& top = num.c_.rbegin()->second;
        if (top % lead != 0) return std::nullopt;
        LaurentZ t = monomial(top / lead, num.degree() - den.degree());
        q += t;
        num -= t * den;
    }
    if (!num.is_zero()) return std::nullopt;
    return q.shifted(shift);
}

std::optional<LaurentZ> LaurentZ::even_part_substitute() const {
    LaurentZ out;
    for (auto& [e, v] : c_) {
        if (e % 2 != 0) return std::nullopt;
        int k = e / 2;
        out.c_[k] = (k % 2 == 0) ? v : Int(-v);
    }
    return out;
}

std::complex<double> LaurentZ::eval(std::complex<double> x) const {
    if (x == std::complex<double>(0.0, 0.0)) throw std::domain_error("Laurent polynomial at zero");
    // Horner over the descending exponents, then restore the valuation
    std::complex<double> acc(0.0, 0.0);
    int prev = 0;
    bool first = true;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        if (first) {
            acc = to_double(it->second);
            prev = it->first;
            first = false;
            continue;
        }
        for (int k = 0; k < prev - it->first; ++k) acc *= x;
        acc += to_double(it->second);
        prev = it->first;
    }
    if (first) return {0.0, 0.0};
    return acc * std::pow(x, prev);
}

Rat LaurentZ::eval_rational(const Rat& x) const {
    if (x == 0) throw std::domain_error("Laurent polynomial at zero");
    Rat acc = 0;
    int prev = 0;
    bool first = true;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        if (first) {
            acc = it->second;
            prev = it->first;
            first = false;
            continue;
        }
        for (int k = 0; k < prev - it->first; ++k) acc *= x;
        acc += Rat(it->second);
        prev = it->first;
    }
    if (first) return 0;
    for (int k = 0; k < std::abs(prev); ++k) {
        if (prev > 0)
            acc *= x;
        else
            acc /= x;
    }
    return acc;
}

std::string LaurentZ::sparse_str() const {
    if (c_.empty()) return "0:0";
    std::ostringstream os;
    bool first = true;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        if (!first) os << " ";
        os << it->second << ":" << it->first;
        first = false;
    }
    return os.str();
}

std::string LaurentZ::pretty_str(const std::string& var) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        Int v = it->second;
        int e = it->first;
        if (first) {
            if (v < 0) os << "-";
        } else {
            os << (v < 0 ? " - " : " + ");
        }
        Int av = iabs(v);
        if (av != 1 || e == 0) os << av;
        if (e != 0) {
            if (av != 1) os << "*";
            os << var;
            if (e != 1) os << "^" << e;
        }
        first = false;
    }
    return os.str();
}

MatLaurent MatLaurent::identity() { return {LaurentZ(1), LaurentZ(), LaurentZ(), LaurentZ(1)}; }

MatLaurent MatLaurent::operator*(const MatLaurent& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
}

bool MatLaurent::operator==(const MatLaurent& o) const {
    return a == o.a && b == o.b && c == o.c && d == o.d;
}

MatLaurent MatLaurent::inverse_det1() const { return {d, -b, -c, a}; }

MatLaurent MatLaurent::negated() const { return {-a, -b, -c, -d}; }

}  // namespace modknot
