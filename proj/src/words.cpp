#include "modknot/words.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace modknot {

Letter flip(Letter x) { return x == Letter::L ? Letter::R : Letter::L; }

Word parse_word(const std::string& s) {
    Word w;
    w.reserve(s.size());
    for (char c : s) {
        if (c == 'L' || c == 'l')
            w.push_back(Letter::L);
        else if (c == 'R' || c == 'r')
            w.push_back(Letter::R);
        else
            throw std::invalid_argument("word may only contain letters L and R: '" + s + "'");
    }
    if (w.empty()) throw std::invalid_argument("empty word");
    return w;
}

std::string to_string(const Word& w) {
    std::string s;
    s.reserve(w.size());
    for (Letter x : w) s.push_back(x == Letter::L ? 'L' : 'R');
    return s;
}

Word concat(const Word& a, const Word& b) {
    Word w = a;
    w.insert(w.end(), b.begin(), b.end());
    return w;
}

Word word_pow(const Word& w, int n) {
    if (n < 1) throw std::invalid_argument("word_pow wants n >= 1");
    Word out;
    out.reserve(w.size() * n);
    for (int i = 0; i < n; ++i) out.insert(out.end(), w.begin(), w.end());
    return out;
}

Word transpose(const Word& w) {
    Word out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(flip(*it));
    return out;
}

Word rotated(const Word& w, int k) {
    const int n = static_cast<int>(w.size());
    if (n == 0) return w;
    k = ((k % n) + n) % n;
    Word out;
    out.reserve(n);
    out.insert(out.end(), w.begin() + k, w.end());
    out.insert(out.end(), w.begin(), w.begin() + k);
    return out;
}

int rad(const Word& w) {
    int r = 0;
    for (Letter x : w) r += (x == Letter::R) ? 1 : -1;
    return r;
}

bool has_both_letters(const Word& w) {
    bool l = false, r = false;
    for (Letter x : w) (x == Letter::L ? l : r) = true;
    return l && r;
}

int periodized_compare(const Word& u, const Word& v) {
    const int nu = static_cast<int>(u.size()), nv = static_cast<int>(v.size());
    if (nu == 0 || nv == 0) throw std::invalid_argument("periodized_compare wants nonempty words");
    const int limit = nu + nv;
    for (int k = 0; k < limit; ++k) {
        Letter a = u[k % nu], b = v[k % nv];
        if (a != b) return a < b ? -1 : 1;
    }
    return 0;
}

namespace {

// lexicographically greatest rotation, naive n^2 scan (desk scale)
Word max_rotation(const Word& w) {
    Word best = w;
    for (int k = 1; k < static_cast<int>(w.size()); ++k) {
        Word cand = rotated(w, k);
        if (cand > best) best = cand;
    }
    return best;
}

int smallest_period(const Word& w) {
    const int n = static_cast<int>(w.size());
    for (int p = 1; p <= n; ++p) {
        if (n % p != 0) continue;
        bool ok = true;
        for (int i = p; i < n && ok; ++i) ok = (w[i] == w[i - p]);
        if (ok) return p;
    }
    return n;
}

}  // namespace

CyclicWord::CyclicWord(const Word& w) {
    if (w.empty()) throw std::invalid_argument("empty word has no conjugacy class here");
    canon_ = max_rotation(w);
    mult_ = static_cast<int>(canon_.size()) / smallest_period(canon_);
}

Word CyclicWord::primitive_root() const {
    return Word(canon_.begin(), canon_.begin() + len() / mult_);
}

int CyclicWord::rad() const { return modknot::rad(canon_); }

bool CyclicWord::hyperbolic() const { return has_both_letters(canon_); }

CyclicWord CyclicWord::power(int n) const { return CyclicWord(word_pow(canon_, n)); }

std::strong_ordering CyclicWord::operator<=>(const CyclicWord& o) const {
    if (len() != o.len()) return len() <=> o.len();
    return canon_ <=> o.canon_;
}

int occ(const Word& p, const CyclicWord& a) {
    const Word& w = a.word();
    const int n = a.len(), m = static_cast<int>(p.size());
    if (m == 0) throw std::invalid_argument("occ wants a nonempty pattern");
    int count = 0;
    for (int s = 0; s < n; ++s) {
        bool match = true;
        for (int k = 0; k < m && match; ++k) match = (p[k] == w[(s + k) % n]);
        count += match;
    }
    return count;
}

std::map<Word, int> occ_map(const CyclicWord& a, int d) {
    if (d < 1) throw std::invalid_argument("occ_map wants d >= 1");
    const Word& w = a.word();
    const int n = a.len();
    std::map<Word, int> out;
    for (int s = 0; s < n; ++s) {
        Word f;
        f.reserve(d);
        for (int k = 0; k < d; ++k) f.push_back(w[(s + k) % n]);
        ++out[f];
    }
    return out;
}

bool coprime(const CyclicWord& a, const CyclicWord& b) {
    return a.primitive_root() != b.primitive_root();
}

std::vector<CyclicWord> enumerate_classes(int max_len, ClassFilter filter) {
    if (max_len < 1 || max_len > 24) throw std::invalid_argument("enumerate_classes length out of range");
    std::set<CyclicWord> seen;
    for (int n = 1; n <= max_len; ++n) {
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
            Word w(n);
            for (int i = 0; i < n; ++i) w[i] = (mask >> i) & 1 ? Letter::R : Letter::L;
            CyclicWord c(w);
            switch (filter) {
                case ClassFilter::All: break;
                case ClassFilter::Primitive:
                    if (!c.is_primitive()) continue;
                    break;
                case ClassFilter::Hyperbolic:
                    if (!c.hyperbolic()) continue;
                    break;
                case ClassFilter::HyperbolicPrimitive:
                    if (!c.hyperbolic() || !c.is_primitive()) continue;
                    break;
                case ClassFilter::LyndonPositive: {
                    if (!c.is_primitive()) continue;
                    if (!(c.word() > c.transpose_class().word())) continue;
                    break;
                }
            }
            seen.insert(c);
        }
    }
    return std::vector<CyclicWord>(seen.begin(), seen.end());
}

}  // namespace modknot
