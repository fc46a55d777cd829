#pragma once
#include <complex>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "modknot/linking.hpp"
#include "modknot/qdeform.hpp"

namespace modknot {

using Cplx = std::complex<double>;

// Closed form of the linking function along the deformation family:
//   Link_q(A,B) = I/4 + N(q) / (4 sqrt(disc_a(q) disc_b(q)))
// assembled once from the combinatorial crossing set, which does not move
// with q.  N has integer coefficients.
struct SymbolicLinkFn {
    long crossing_count = 0;  // I(A,B)
    LaurentZ numerator;       // N(q) = sum over crossings of Tr(XY) - Tr(XY^-1)
    LaurentZ disc_a, disc_b;

    Cplx eval_link(Cplx q) const;
    Cplx eval_cos(Cplx q) const;
};

SymbolicLinkFn link_q_symbolic(const CyclicWord& A, const CyclicWord& B);

// Fully numeric route: every crossing term is evaluated through complex 2x2
// matrix products, sharing only the crossing list with the symbolic form.
// All three throw domain_error close to a discriminant zero (relative 1e-12).
Cplx link_q(const CyclicWord& A, const CyclicWord& B, Cplx q);
Cplx cos_q(const CyclicWord& A, const CyclicWord& B, Cplx q);

// Signed cosine sum: (1/2) sum of sign * cos over all crossings.
// Conjecturally zero at every q; computed for checking, never assumed.
Cplx wolpert_sum(const CyclicWord& A, const CyclicWord& B, Cplx q);

// Roots of the non-monomial part of p (zeros away from q = 0) by
// Durand-Kerner simultaneous iteration; deterministic order (re, then im).
// Throws runtime_error with the residual list if the iteration cap is hit.
std::vector<Cplx> polynomial_roots(const LaurentZ& p, double tol = 1e-10);

struct RootReport {
    std::vector<Cplx> zeros;  // roots of the numerator
    std::vector<Cplx> poles;  // roots of disc_a * disc_b
};
RootReport roots(const SymbolicLinkFn& f, double tol = 1e-10);

struct Raster {
    int width = 0, height = 0;
    std::vector<std::uint8_t> rgb;  // 3 bytes per pixel, rows from the top
};

// Domain coloring of Link_q over the square grid centered at `center` with
// half-side `radius`: hue = arg/2pi, value = |z|/(1+|z|), full saturation;
// pixels within 1e-12 (relative) of a discriminant zero are white.
Raster plot_grid(const CyclicWord& A, const CyclicWord& B, Cplx center, double radius, int pixels);
void write_ppm(const Raster& r, std::ostream& os);

// Geometry of one pair of deformed axes at real parameter q > 0.  Crossing
// axes report the oriented angle, disjoint axes the signed length of the
// ortho-geodesic arc between them.
struct PairGeometry {
    bool crossing = false;
    double angle = 0;         // in (-pi,pi) \ {0} when crossing
    double ortho_length = 0;  // sign compares the co-orientations
};
PairGeometry geodesic_pair_geometry(const MatZ& A, const MatZ& B, double q);

}  // namespace modknot
