#include "modknot/linking.hpp"

#include <algorithm>
#include <stdexcept>

namespace modknot {

namespace {

void require_hyperbolic(const CyclicWord& A, const CyclicWord& B, const char* who) {
    if (!A.hyperbolic() || !B.hyperbolic())
        throw std::invalid_argument(std::string(who) + " wants hyperbolic classes");
}

// Crossing test for two axes running through the base edge, presented as the
// periodic words u^inf, v^inf.  They cross exactly when the endpoints
// interleave, which the periodized order detects: the words must end in
// different letters, and the one ending in L must dominate lexicographically.
// Equal periodizations (same axis) never cross.
bool lex_crossing(const Word& u, const Word& v) {
    if (u.back() == v.back()) return false;
    int cmp = periodized_compare(u, v);
    if (cmp == 0) return false;
    return u.back() == Letter::L ? cmp > 0 : cmp < 0;
}

Word swapped_ends(const Word& p) {
    Word q = p;
    q.front() = flip(q.front());
    q.back() = flip(q.back());
    return q;
}

int lookup(const std::map<Word, int>& m, const Word& k) {
    auto it = m.find(k);
    return it == m.end() ? 0 : it->second;
}

Word reversed(Word w) {
    std::reverse(w.begin(), w.end());
    return w;
}

int common_prefix_len(const Word& u, const Word& v, int cap) {
    for (int h = 0; h < cap; ++h)
        if (u[h % u.size()] != v[h % v.size()]) return h;
    return cap;
}

// Number of tree edges shared by the two axes u^inf, v^inf through the base
// edge: the base edge itself, plus as many letters as their heads agree, plus
// as many as their tails agree.  Distinct primitive classes can only agree on
// fewer than len(u)+len(v) letters (Fine-Wilf), so hitting the cap means the
// axes coincide.
int shared_corridor(const Word& u, const Word& v) {
    int cap = static_cast<int>(u.size() + v.size());
    int h = common_prefix_len(u, v, cap);
    int t = common_prefix_len(reversed(u), reversed(v), cap);
    if (h >= cap || t >= cap) throw std::logic_error("shared corridor is unbounded");
    return h + t + 1;
}

}  // namespace

std::pair<MatZ, MatZ> crossing_matrices(const CyclicWord& A, const CyclicWord& B, const Crossing& x) {
    MatZ X = word_to_matrix(rotated(A.word(), x.i));
    MatZ Y = word_to_matrix(rotated(B.word(), x.j));
    if (!x.plus_side) {
        MatZ s = mat_S();
        Y = s * Y * s.inverse();
    }
    return {X, Y};
}

std::vector<Crossing> enumerate_crossings(const CyclicWord& A, const CyclicWord& B) {
    require_hyperbolic(A, B, "enumerate_crossings");
    if (!coprime(A, B)) throw std::invalid_argument("enumerate_crossings wants coprime classes");
    std::vector<Crossing> out;
    std::vector<Word> rot_a, rot_b, rot_bt;
    for (int i = 1; i <= A.len(); ++i) rot_a.push_back(rotated(A.word(), i));
    for (int j = 1; j <= B.len(); ++j) {
        rot_b.push_back(rotated(B.word(), j));
        rot_bt.push_back(transpose(rot_b.back()));
    }
    for (int i = 1; i <= A.len(); ++i)
        for (int j = 1; j <= B.len(); ++j)
            if (lex_crossing(rot_a[i - 1], rot_b[j - 1])) out.push_back({i, j, true, 0});
    for (int i = 1; i <= A.len(); ++i)
        for (int j = 1; j <= B.len(); ++j)
            if (lex_crossing(rot_a[i - 1], rot_bt[j - 1])) out.push_back({i, j, false, 0});
    for (Crossing& x : out) {
        auto [X, Y] = crossing_matrices(A, B, x);
        AxesCross ac = axes_cross(X, Y);
        if (ac.across != 1) throw std::logic_error("lexicographic crossing not transversal");
        x.sign = ac.sign;
    }
    return out;
}

long lk_shift(const CyclicWord& A, const CyclicWord& B) {
    require_hyperbolic(A, B, "lk_shift");
    if (!coprime(A, B)) throw std::invalid_argument("lk_shift wants coprime classes (use lk_slp for powers)");
    long count = 0;
    for (int i = 1; i <= A.len(); ++i) {
        Word u = rotated(A.word(), i);
        for (int j = 1; j <= B.len(); ++j)
            if (lex_crossing(u, rotated(B.word(), j))) ++count;
    }
    if (count % 2 != 0) throw std::logic_error("odd crossing count");
    return count / 2;
}

long lk_oracle(const CyclicWord& A, const CyclicWord& B) {
    require_hyperbolic(A, B, "lk_oracle");
    if (!coprime(A, B)) throw std::invalid_argument("lk_oracle wants coprime classes (use lk_slp for powers)");
    // Geometric route: two lifted axes through the base edge cross at most
    // once, but the same intersection point on the surface shows up once for
    // every tree edge the two axes share.  Dividing each hit by the corridor
    // length makes the sum count intersection points exactly.
    Rat sum = 0;
    for (int i = 1; i <= A.len(); ++i) {
        Word u = rotated(A.word(), i);
        MatZ X = word_to_matrix(u);
        for (int j = 1; j <= B.len(); ++j) {
            Word v = rotated(B.word(), j);
            AxesCross ac = axes_cross(X, word_to_matrix(v));
            if (ac.across == 1) sum += Rat(1, shared_corridor(u, v));
        }
    }
    sum /= 2;
    if (boost::multiprecision::denominator(sum) != 1)
        throw std::logic_error("oracle crossing sum is not an integer");
    return boost::multiprecision::numerator(sum).convert_to<long>();
}

long lk_slp(const CyclicWord& A, const CyclicWord& B) {
    require_hyperbolic(A, B, "lk_slp");
    // Patterns longer than len(A)+len(B) cannot occur in both periodized
    // words unless the classes coincide (Fine-Wilf), so the sum is finite.
    const int m = A.len() + B.len();
    long twice = 0;
    for (int d = 2; d <= m; ++d) {
        auto amap = occ_map(A, d);
        auto bmap = occ_map(B, d);
        for (auto& [p, ca] : amap) {
            if (p.front() == p.back()) continue;
            twice += static_cast<long>(ca) * lookup(bmap, swapped_ends(p));
        }
    }
    if (twice % 2 != 0) throw std::logic_error("odd pattern pairing sum");
    return twice / 2;
}

long lk(const CyclicWord& A, const CyclicWord& B) {
    return coprime(A, B) ? lk_shift(A, B) : lk_slp(A, B);
}

long intersection_number(const CyclicWord& A, const CyclicWord& B) {
    return 2 * (lk(A, B) + lk(A, B.transpose_class()));
}

long cos_a(const CyclicWord& A, const CyclicWord& B) {
    if (!A.is_primitive()) throw std::invalid_argument("cos_a wants a primitive first argument");
    if (!A.hyperbolic()) {
        // the single-letter classes act as +/- rad
        return A.word().front() == Letter::R ? B.rad() : -B.rad();
    }
    if (!B.hyperbolic()) return 0;  // no mixed-letter patterns in a parabolic power

    long via_lk = lk(A, B) - lk(A, B.transpose_class());

    long twice = 0;
    const int m = A.len() + B.len();
    for (int d = 2; d <= m; ++d) {
        auto amap = occ_map(A, d);
        auto bmap = occ_map(B, d);
        for (auto& [p, ca] : amap) {
            if (p.front() == p.back()) continue;
            Word q = swapped_ends(p);
            long mas_q = lookup(bmap, q) - lookup(bmap, transpose(q));
            twice += static_cast<long>(ca) * mas_q;
        }
    }
    if (twice % 2 != 0) throw std::logic_error("odd pattern sum in cos_a");
    long via_patterns = twice / 2;
    if (via_patterns != via_lk)
        throw std::logic_error("cos_a routes disagree: lk difference " + std::to_string(via_lk) +
                               " vs pattern sum " + std::to_string(via_patterns));
    return via_lk;
}

std::optional<CyclicWord> link_equiv_witness(const CyclicWord& A, const CyclicWord& B, int max_len) {
    for (const CyclicWord& x : enumerate_classes(max_len, ClassFilter::HyperbolicPrimitive)) {
        if (!coprime(x, A) || !coprime(x, B)) continue;
        if (lk(A, x) != lk(B, x)) return x;
    }
    return std::nullopt;
}

}  // namespace modknot
