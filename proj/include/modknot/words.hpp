#pragma once
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace modknot {

// Letters of the positive monoid; the order L < R is what every lexicographic
// comparison below refers to.
enum class Letter : std::uint8_t { L = 0, R = 1 };

using Word = std::vector<Letter>;

Letter flip(Letter x);

Word parse_word(const std::string& s);  // throws std::invalid_argument on junk
std::string to_string(const Word& w);

Word concat(const Word& a, const Word& b);
Word word_pow(const Word& w, int n);  // n >= 1

// reverse the word and swap L <-> R (matrix transpose on the monoid)
Word transpose(const Word& w);

// sigma^k: move the first k letters to the end (k taken mod len)
Word rotated(const Word& w, int k);

int rad(const Word& w);  // #R - #L
bool has_both_letters(const Word& w);

// Compare u^infinity against v^infinity letter by letter (L < R).
// Returns -1, 0, +1.  len(u)+len(v) letters decide (Fine–Wilf).
int periodized_compare(const Word& u, const Word& v);

// Conjugacy class of a nonempty positive word: stored as the lexicographically
// greatest rotation together with the multiplicity over its primitive root.
class CyclicWord {
  public:
    explicit CyclicWord(const Word& w);
    explicit CyclicWord(const std::string& s) : CyclicWord(parse_word(s)) {}

    const Word& word() const { return canon_; }
    int len() const { return static_cast<int>(canon_.size()); }
    int mult() const { return mult_; }
    Word primitive_root() const;
    CyclicWord primitive() const { return CyclicWord(primitive_root()); }
    bool is_primitive() const { return mult_ == 1; }

    int rad() const;
    bool hyperbolic() const;  // both letters occur
    CyclicWord transpose_class() const { return CyclicWord(transpose(canon_)); }
    bool symmetric() const { return transpose_class() == *this; }
    CyclicWord power(int n) const;  // n >= 1

    std::string str() const { return to_string(canon_); }

    bool operator==(const CyclicWord& o) const { return canon_ == o.canon_; }
    // order: by length, then lexicographic on the canonical rotation
    std::strong_ordering operator<=>(const CyclicWord& o) const;

  private:
    Word canon_;
    int mult_;
};

// Number of shifts j in [1, len(a)] such that p is a prefix of sigma^j(a^infinity).
int occ(const Word& p, const CyclicWord& a);

// All length-d factors of a^infinity read from the len(a) shift positions, with counts.
// Counts sum to len(a).
std::map<Word, int> occ_map(const CyclicWord& a, int d);

// Distinct primitive roots (as conjugacy classes).
bool coprime(const CyclicWord& a, const CyclicWord& b);

enum class ClassFilter {
    All,                  // every class, including powers and single-letter words
    Primitive,            // multiplicity 1
    Hyperbolic,           // both letters occur (any multiplicity)
    HyperbolicPrimitive,  // both letters, multiplicity 1
    LyndonPositive,       // primitive with canonical > canonical of transpose class
};

// Classes of length <= max_len matching the filter, sorted by (length, lex).
std::vector<CyclicWord> enumerate_classes(int max_len, ClassFilter filter);

}  // namespace modknot
