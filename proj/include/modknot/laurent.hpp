#pragma once
#include <complex>
#include <map>
#include <optional>
#include <string>

#include "modknot/integers.hpp"

namespace modknot {

// Sparse Laurent polynomial with integer coefficients.
class LaurentZ {
  public:
    LaurentZ() = default;
    LaurentZ(Int constant);
    static LaurentZ monomial(Int coeff, int exp);
    static LaurentZ var(int exp = 1) { return monomial(1, exp); }

    bool is_zero() const { return c_.empty(); }
    int degree() const;     // throws std::domain_error on zero
    int valuation() const;  // throws std::domain_error on zero
    Int coeff(int e) const;
    const std::map<int, Int>& terms() const { return c_; }

    LaurentZ operator+(const LaurentZ& o) const;
    LaurentZ operator-(const LaurentZ& o) const;
    LaurentZ operator-() const;
    LaurentZ operator*(const LaurentZ& o) const;
    LaurentZ& operator+=(const LaurentZ& o) { return *this = *this + o; }
    LaurentZ& operator-=(const LaurentZ& o) { return *this = *this - o; }
    LaurentZ& operator*=(const LaurentZ& o) { return *this = *this * o; }
    bool operator==(const LaurentZ& o) const { return c_ == o.c_; }

    LaurentZ pow(int n) const;        // n >= 0
    LaurentZ shifted(int k) const;    // multiply by x^k
    LaurentZ inverted_var() const;    // x -> 1/x
    bool is_reciprocal() const { return *this == inverted_var(); }

    // exact division; nullopt when the division leaves a remainder
    std::optional<LaurentZ> divided_exact(const LaurentZ& d) const;

    // substitute x^2 = -u: exponent 2k becomes coefficient*(-1)^k at u^k;
    // nullopt when an odd exponent is present
    std::optional<LaurentZ> even_part_substitute() const;

    std::complex<double> eval(std::complex<double> x) const;  // x != 0
    Rat eval_rational(const Rat& x) const;                    // x != 0

    std::string sparse_str() const;                                // "c:e c:e" by falling exponent
    std::string pretty_str(const std::string& var = "q") const;    // human-readable sum

  private:
    void trim();
    std::map<int, Int> c_;  // exponent -> nonzero coefficient
};

struct MatLaurent {
    LaurentZ a, b, c, d;

    static MatLaurent identity();
    MatLaurent operator*(const MatLaurent& o) const;
    bool operator==(const MatLaurent& o) const;
    LaurentZ trace() const { return a + d; }
    LaurentZ det() const { return a * d - b * c; }
    MatLaurent inverse_det1() const;  // adjugate; valid when det == 1
    MatLaurent negated() const;
};

}  // namespace modknot
