#include "modknot/surd.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace modknot {

namespace {

// sign of p + s*sqrt(D) with s in {-1,0,+1}, D >= 0
int sign_one(const Int& p, int s, const Int& D) {
    if (s == 0 || D == 0) return sgn(p);
    if (p == 0) return s;
    if ((p > 0) == (s > 0)) return sgn(p);
    // opposite signs: compare |p| with sqrt(D)
    return s > 0 ? sgn(D - p * p) : sgn(p * p - D);
}

// sign of A + s1*sqrt(D1) + s2*sqrt(D2)
int sign_two(const Int& A, int s1, const Int& D1, int s2, const Int& D2) {
    if (s1 == 0 || D1 == 0) return sign_one(A, s2, D2);
    if (s2 == 0 || D2 == 0) return sign_one(A, s1, D1);
    int t1 = sign_one(A, s1, D1);
    if (t1 == 0) return s2;
    if (t1 == s2) return t1;
    // T1 = A + s1 sqrt(D1) and T2 = s2 sqrt(D2) have opposite signs:
    // sign(T1+T2) = t1 * sign(T1^2 - T2^2), and
    // T1^2 - T2^2 = (A^2 + D1 - D2) + 2 A s1 sqrt(D1).
    int w = sign_one(A * A + D1 - D2, sgn(A) * s1, 4 * A * A * D1);
    return t1 * w;
}

// largest h dividing g with h^2 dividing delta (trial division; g is small here)
Int square_part(Int g, const Int& delta) {
    Int h = 1;
    Int p = 2;
    while (p * p <= g && p < 1000000) {
        if (g % p == 0) {
            int vg = 0;
            while (g % p == 0) {
                g /= p;
                ++vg;
            }
            int vd = 0;
            Int d = delta;
            while (d % (p * p) == 0) {
                d /= p * p;
                ++vd;
            }
            int k = std::min(vg, vd);
            for (int i = 0; i < k; ++i) h *= p;
        }
        p += (p == 2) ? 1 : 2;
    }
    if (g > 1 && delta % (g * g) == 0) h *= g;
    return h;
}

}  // namespace

QuadSurd::QuadSurd(Int p, int e, Int delta, Int r) : p_(std::move(p)), e_(e), delta_(std::move(delta)), r_(std::move(r)) {
    if (r_ == 0) throw std::invalid_argument("surd with zero denominator");
    if (e_ != 0 && delta_ < 0) throw std::invalid_argument("negative discriminant, surd not real");
    if (r_ < 0) {
        p_ = -p_;
        e_ = -e_;
        r_ = -r_;
    }
    if (e_ == 0 || delta_ == 0) {
        e_ = 0;
        delta_ = 0;
    } else {
        Int root;
        if (is_square(delta_, &root)) {
            p_ += e_ * root;
            e_ = 0;
            delta_ = 0;
        }
    }
    Int g = gcd(iabs(p_), r_);
    if (g > 1) {
        if (e_ == 0) {
            p_ /= g;
            r_ /= g;
        } else {
            Int h = square_part(g, delta_);
            if (h > 1) {
                p_ /= h;
                r_ /= h;
                delta_ /= h * h;
            }
        }
    }
}

QuadSurd QuadSurd::infinity() { return QuadSurd(); }

double QuadSurd::approx() const {
    if (inf_) return std::numeric_limits<double>::infinity();
    return (to_double(p_) + e_ * std::sqrt(to_double(delta_))) / to_double(r_);
}

std::string QuadSurd::str() const {
    if (inf_) return "inf";
    std::ostringstream os;
    if (e_ == 0) {
        os << p_;
        if (r_ != 1) os << "/" << r_;
        return os.str();
    }
    os << "(" << p_ << (e_ > 0 ? "+" : "-") << "sqrt(" << delta_ << "))";
    if (r_ != 1) os << "/" << r_;
    return os.str();
}

int compare(const QuadSurd& x, const QuadSurd& y) {
    if (x.is_infinity() || y.is_infinity()) throw std::invalid_argument("compare wants finite surds");
    // x - y over the common positive denominator r_x r_y
    Int A = x.p() * y.r() - y.p() * x.r();
    int s1 = x.e();
    Int D1 = s1 == 0 ? Int(0) : Int(y.r() * y.r() * x.delta());
    int s2 = -y.e();
    Int D2 = s2 == 0 ? Int(0) : Int(x.r() * x.r() * y.delta());
    return sign_two(A, s1, D1, s2, D2);
}

bool operator==(const QuadSurd& x, const QuadSurd& y) {
    if (x.is_infinity() || y.is_infinity()) return x.is_infinity() && y.is_infinity();
    return compare(x, y) == 0;
}

int cord(const QuadSurd& x, const QuadSurd& y, const QuadSurd& z) {
    if (x == y || y == z || x == z) return 0;
    if (x.is_infinity()) return compare(z, y);
    if (y.is_infinity()) return compare(x, z);
    if (z.is_infinity()) return compare(y, x);
    return compare(y, x) * compare(z, y) * compare(z, x);
}

int cross_halves(const QuadSurd& u, const QuadSurd& v, const QuadSurd& x, const QuadSurd& y) {
    return cord(u, x, v) - cord(u, y, v);
}

double cross(const QuadSurd& u, const QuadSurd& v, const QuadSurd& x, const QuadSurd& y) {
    return 0.5 * cross_halves(u, v, x, y);
}

std::pair<QuadSurd, QuadSurd> fixed_points(const MatZ& m) {
    if (classify(m) != ElType::Hyperbolic) throw std::invalid_argument("fixed_points wants a hyperbolic element");
    if (m.c() == 0) throw std::logic_error("hyperbolic integer matrix with zero lower-left entry");
    Int delta = m.trace() * m.trace() - 4;
    Int ad = m.a() - m.d();
    // derivative (2/(tr ± sqrt(delta)))^2 at the fixed point: the + root attracts
    return {QuadSurd(ad, 1, delta, 2 * m.c()), QuadSurd(ad, -1, delta, 2 * m.c())};
}

AxesCross axes_cross(const MatZ& A, const MatZ& B) {
    auto [a_att, a_rep] = fixed_points(A);
    auto [b_att, b_rep] = fixed_points(B);
    if (a_att == b_att || a_att == b_rep || a_rep == b_att || a_rep == b_rep)
        throw std::domain_error("axes share an endpoint");
    int ch = cross_halves(a_rep, a_att, b_rep, b_att);
    if (ch != 0 && ch != 2 && ch != -2) throw std::logic_error("half-integral crossing without shared endpoint");
    return {ch == 0 ? 0 : 1, sgn(Int(ch))};
}

}  // namespace modknot
