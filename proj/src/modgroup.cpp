#include "modknot/modgroup.hpp"

#include <cmath>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace modknot {

MatZ::MatZ(Int a, Int b, Int c, Int d) : a_(a), b_(b), c_(c), d_(d) {
    if (a_ * d_ - b_ * c_ != 1) throw std::invalid_argument("matrix must have determinant 1: " + str());
    Int tr = a_ + d_;
    bool negate = tr < 0 || (tr == 0 && c_ < 0);
    if (negate) {
        a_ = -a_;
        b_ = -b_;
        c_ = -c_;
        d_ = -d_;
    }
}

MatZ MatZ::operator*(const MatZ& o) const {
    return MatZ(a_ * o.a_ + b_ * o.c_, a_ * o.b_ + b_ * o.d_,
                c_ * o.a_ + d_ * o.c_, c_ * o.b_ + d_ * o.d_);
}

MatZ MatZ::inverse() const { return MatZ(d_, -b_, -c_, a_); }

MatZ MatZ::transposed() const { return MatZ(a_, c_, b_, d_); }

bool MatZ::operator==(const MatZ& o) const {
    return a_ == o.a_ && b_ == o.b_ && c_ == o.c_ && d_ == o.d_;
}

std::string MatZ::str() const {
    std::ostringstream os;
    os << "[[" << a_ << "," << b_ << "],[" << c_ << "," << d_ << "]]";
    return os.str();
}

MatZ mat_L() { return MatZ(1, 0, 1, 1); }
MatZ mat_R() { return MatZ(1, 1, 0, 1); }
MatZ mat_S() { return MatZ(0, -1, 1, 0); }
MatZ mat_T() { return MatZ(1, -1, 1, 0); }

MatZ parse_matrix(const std::string& csv) {
    std::vector<Int> v;
    std::string cur;
    for (char ch : csv + ",") {
        if (ch == ',') {
            if (cur.empty()) throw std::invalid_argument("matrix wants four comma-separated integers");
            v.emplace_back(cur);
            cur.clear();
        } else if (ch == '-' || ch == '+' || (ch >= '0' && ch <= '9')) {
            cur.push_back(ch);
        } else if (ch != ' ') {
            throw std::invalid_argument(std::string("bad character in matrix entry: ") + ch);
        }
    }
    if (v.size() != 4) throw std::invalid_argument("matrix wants four comma-separated integers");
    return MatZ(v[0], v[1], v[2], v[3]);
}

MatZ word_to_matrix(const Word& w) {
    MatZ m = MatZ::identity();
    for (Letter x : w) m = m * (x == Letter::L ? mat_L() : mat_R());
    return m;
}

MatZ word_to_matrix(const CyclicWord& c) { return word_to_matrix(c.word()); }

ElType classify(const MatZ& m) {
    Int tr = m.trace();  // normalized lift, tr >= 0
    if (tr >= 3) return ElType::Hyperbolic;
    if (tr == 2) return m == MatZ::identity() ? ElType::Identity : ElType::Parabolic;
    return ElType::Elliptic;
}

std::string to_string(const STWord& w) {
    std::string s;
    for (STGen g : w) {
        if (!s.empty()) s.push_back(' ');
        s += (g == STGen::S) ? "S" : (g == STGen::T) ? "T" : "T2";
    }
    return s.empty() ? "1" : s;
}

MatZ st_to_matrix(const STWord& w) {
    MatZ m = MatZ::identity();
    MatZ t = mat_T();
    for (STGen g : w) m = m * (g == STGen::S ? mat_S() : g == STGen::T ? t : t * t);
    return m;
}

namespace {

// nearest-integer quotient of a/c, any tie broken toward the smaller n
Int nearest_quotient(const Int& a, const Int& c) {
    Int q = a / c;  // truncated
    Int best = q;
    Int err = iabs(a - q * c);
    for (Int cand : {Int(q - 1), Int(q + 1)}) {
        Int e = iabs(a - cand * c);
        if (e < err || (e == err && cand < best)) {
            best = cand;
            err = e;
        }
    }
    return best;
}

void push_reduced(std::vector<std::pair<bool, int>>& stack, bool is_s, int tpow) {
    // tokens: (true, 0) = S, (false, k) = T^k
    if (!stack.empty() && stack.back().first == is_s) {
        if (is_s) {
            stack.pop_back();  // S S = 1
            return;
        }
        int k = (stack.back().second + tpow) % 3;
        stack.pop_back();
        if (k != 0) stack.emplace_back(false, k);
        return;
    }
    stack.emplace_back(is_s, tpow);
}

void push_r_power(std::vector<std::pair<bool, int>>& stack, const Int& n) {
    // R = TS, R^-1 = S T^2
    if (n > 0)
        for (Int i = 0; i < n; ++i) {
            push_reduced(stack, false, 1);
            push_reduced(stack, true, 0);
        }
    else
        for (Int i = 0; i < -n; ++i) {
            push_reduced(stack, true, 0);
            push_reduced(stack, false, 2);
        }
}

}  // namespace

STWord st_factor(const MatZ& m) {
    Int a = m.a(), b = m.b(), c = m.c(), d = m.d();
    std::vector<std::pair<bool, int>> stack;
    while (c != 0) {
        Int n = nearest_quotient(a, c);
        // m = R^n S m'  with  m' = S^-1 R^-n m
        push_r_power(stack, n);
        push_reduced(stack, true, 0);
        Int a2 = c, b2 = d, c2 = -(a - n * c), d2 = -(b - n * d);
        a = a2;
        b = b2;
        c = c2;
        d = d2;
    }
    // now m' is [[±1, b],[0, ±1]] = R^(a*b) up to sign
    push_r_power(stack, a * b);
    STWord out;
    out.reserve(stack.size());
    for (auto& [is_s, k] : stack) out.push_back(is_s ? STGen::S : (k == 1 ? STGen::T : STGen::T2));
    return out;
}

ConjClass reduce_to_cycle(const MatZ& m) {
    STWord w = st_factor(m);
    std::deque<std::pair<bool, int>> d;  // (is_s, tpow)
    for (STGen g : w) d.emplace_back(g == STGen::S, g == STGen::T ? 1 : g == STGen::T2 ? 2 : 0);

    // cyclic reduction in Z/2 * Z/3
    while (d.size() >= 2 && d.front().first == d.back().first) {
        if (d.front().first) {
            d.pop_front();
            d.pop_back();
        } else {
            int k = (d.front().second + d.back().second) % 3;
            d.pop_front();
            d.pop_back();
            if (k != 0) d.emplace_front(false, k);
        }
    }

    if (d.empty()) return {ConjClass::Kind::Identity, std::nullopt};
    if (d.size() == 1) {
        auto [is_s, k] = d.front();
        if (is_s) return {ConjClass::Kind::TorsionS, std::nullopt};
        return {k == 1 ? ConjClass::Kind::TorsionT : ConjClass::Kind::TorsionT2, std::nullopt};
    }

    // alternating even cycle; rotate so it starts with a T-power
    if (d.front().first) {
        d.push_back(d.front());
        d.pop_front();
    }
    Word letters;
    for (size_t i = 0; i < d.size(); i += 2) {
        if (d[i].first || !d[i + 1].first) throw std::logic_error("cycle not alternating");
        letters.push_back(d[i].second == 1 ? Letter::R : Letter::L);  // TS = R, T^2 S = L
    }
    return {ConjClass::Kind::Translation, CyclicWord(letters)};
}

std::string ConjClass::str() const {
    switch (kind) {
        case Kind::Identity: return "1";
        case Kind::TorsionS: return "S";
        case Kind::TorsionT: return "T";
        case Kind::TorsionT2: return "T2";
        case Kind::Translation: return cycle->str();
    }
    return "?";
}

int comb_len(const MatZ& m) {
    ConjClass c = reduce_to_cycle(m);
    return c.kind == ConjClass::Kind::Translation ? c.cycle->len() : 0;
}

int cosign_len(const MatZ& A, const MatZ& B) {
    if (classify(A) != ElType::Hyperbolic || classify(B) != ElType::Hyperbolic)
        throw std::invalid_argument("cosign_len wants two hyperbolic elements");
    int s = comb_len(A * B) - comb_len(A * B.inverse());
    if (s == 0) throw std::domain_error("axes share no edge, cosign undefined");
    return s > 0 ? 1 : -1;
}

double geodesic_length(const MatZ& m) {
    if (classify(m) != ElType::Hyperbolic) return 0.0;
    return 2.0 * std::acosh(to_double(m.trace()) / 2.0);
}

}  // namespace modknot
