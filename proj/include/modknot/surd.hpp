#pragma once
#include <string>
#include <utility>

#include "modknot/integers.hpp"
#include "modknot/modgroup.hpp"

namespace modknot {

// Real quadratic surd (p + e*sqrt(delta)) / r with e in {-1,0,+1}, r > 0,
// plus a dedicated point at infinity.  Perfect-square deltas collapse to the
// rational case; common factors g with g | p, g | r, g^2 | delta are removed.
class QuadSurd {
  public:
    QuadSurd(Int p, int e, Int delta, Int r);
    static QuadSurd rational(Int p, Int r) { return QuadSurd(std::move(p), 0, 0, std::move(r)); }
    static QuadSurd infinity();

    bool is_infinity() const { return inf_; }
    bool is_rational() const { return !inf_ && e_ == 0; }

    const Int& p() const { return p_; }
    int e() const { return e_; }
    const Int& delta() const { return delta_; }
    const Int& r() const { return r_; }

    double approx() const;
    std::string str() const;

  private:
    QuadSurd() : p_(0), e_(0), delta_(0), r_(1), inf_(true) {}
    Int p_;
    int e_;
    Int delta_;
    Int r_;
    bool inf_ = false;
};

// Exact three-way comparison of finite surds (throws on infinity).
int compare(const QuadSurd& x, const QuadSurd& y);
bool operator==(const QuadSurd& x, const QuadSurd& y);

// Circular order of three points on the boundary circle R u {inf}:
// +1 / -1 for the two orientations, 0 when any two coincide.
// Anchored by cord(0, 1, inf) = +1.
int cord(const QuadSurd& x, const QuadSurd& y, const QuadSurd& z);

// Twice the crossing pairing of geodesics (u -> v) and (x -> y):
// cross = (cord(u,x,v) - cord(u,y,v)) / 2 in {-1, -1/2, 0, 1/2, 1}.
int cross_halves(const QuadSurd& u, const QuadSurd& v, const QuadSurd& x, const QuadSurd& y);
double cross(const QuadSurd& u, const QuadSurd& v, const QuadSurd& x, const QuadSurd& y);

// (attracting, repelling) fixed points of a hyperbolic element.
std::pair<QuadSurd, QuadSurd> fixed_points(const MatZ& m);

struct AxesCross {
    int across;  // 1 if the axes cross transversally, else 0
    int sign;    // orientation sign of the crossing, 0 when disjoint
};

// Transversality of the hyperbolic axes of A and B; throws std::domain_error
// when the axes share an endpoint (including equal axes).
AxesCross axes_cross(const MatZ& A, const MatZ& B);

}  // namespace modknot
