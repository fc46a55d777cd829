#include "modknot/charvar.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace modknot {

namespace {

constexpr double kPoleRel = 1e-12;

// growth envelope sum |c_k| r^k, an upper bound for |p| on the circle |q| = r
double abs_eval(const LaurentZ& p, double r) {
    double s = 0;
    for (const auto& [e, c] : p.terms()) s += std::abs(to_double(c)) * std::pow(r, e);
    return s;
}

bool near_disc_zero(const LaurentZ& da, const LaurentZ& db, Cplx q, Cplx* denom) {
    if (std::abs(q) < 1e-12) return true;
    Cplx d = da.eval(q) * db.eval(q);
    *denom = std::sqrt(d);
    double env = abs_eval(da, std::abs(q)) * abs_eval(db, std::abs(q));
    return std::abs(d) < kPoleRel * std::max(env, 1.0);
}

// cosines of the crossing angles, one per entry of `list`, all sharing the
// principal square root of the discriminant product
std::vector<Cplx> crossing_cosines(const CyclicWord& A, const CyclicWord& B,
                                   const std::vector<Crossing>& list, Cplx q) {
    Cplx denom;
    if (near_disc_zero(disc_q(A), disc_q(B), q, &denom))
        throw std::domain_error("link_q evaluated at a discriminant zero");
    Mat2c s = numeric_S();
    Mat2c sinv = s.inverse_det1();
    std::vector<Cplx> out;
    out.reserve(list.size());
    for (const Crossing& x : list) {
        Mat2c X = numeric_matrix(rotated(A.word(), x.i), q);
        Mat2c Y = numeric_matrix(rotated(B.word(), x.j), q);
        if (!x.plus_side) Y = s * Y * sinv;
        Cplx n = (X * Y).trace() - (X * Y.inverse_det1()).trace();
        out.push_back(n / denom);
    }
    return out;
}

void hsv_to_rgb(double h, double s, double v, std::uint8_t* px) {
    h -= std::floor(h);
    double r, g, b;
    int i = static_cast<int>(h * 6) % 6;
    double f = h * 6 - std::floor(h * 6);
    double p = v * (1 - s), u = v * (1 - s * f), t = v * (1 - s * (1 - f));
    switch (i) {
        case 0: r = v, g = t, b = p; break;
        case 1: r = u, g = v, b = p; break;
        case 2: r = p, g = v, b = t; break;
        case 3: r = p, g = u, b = v; break;
        case 4: r = t, g = p, b = v; break;
        default: r = v, g = p, b = u; break;
    }
    px[0] = static_cast<std::uint8_t>(std::lround(255 * r));
    px[1] = static_cast<std::uint8_t>(std::lround(255 * g));
    px[2] = static_cast<std::uint8_t>(std::lround(255 * b));
}

}  // namespace

Cplx SymbolicLinkFn::eval_link(Cplx q) const {
    Cplx denom;
    if (near_disc_zero(disc_a, disc_b, q, &denom))
        throw std::domain_error("link_q evaluated at a discriminant zero");
    return static_cast<double>(crossing_count) / 4.0 + numerator.eval(q) / (4.0 * denom);
}

Cplx SymbolicLinkFn::eval_cos(Cplx q) const {
    Cplx denom;
    if (near_disc_zero(disc_a, disc_b, q, &denom))
        throw std::domain_error("cos_q evaluated at a discriminant zero");
    return numerator.eval(q) / (2.0 * denom);
}

SymbolicLinkFn link_q_symbolic(const CyclicWord& A, const CyclicWord& B) {
    auto list = enumerate_crossings(A, B);
    SymbolicLinkFn f;
    f.crossing_count = static_cast<long>(list.size());
    f.disc_a = disc_q(A);
    f.disc_b = disc_q(B);
    MatLaurent s = q_mat_S();
    MatLaurent sinv = s.inverse_det1();
    std::vector<MatLaurent> xq, yq;
    for (int i = 1; i <= A.len(); ++i) xq.push_back(q_matrix(rotated(A.word(), i)));
    for (int j = 1; j <= B.len(); ++j) yq.push_back(q_matrix(rotated(B.word(), j)));
    for (const Crossing& x : list) {
        const MatLaurent& X = xq[x.i - 1];
        MatLaurent Y = yq[x.j - 1];
        if (!x.plus_side) Y = s * Y * sinv;
        // positive-word lifts have positive trace at q > 0, so the sign
        // factor of the cosine formula is +1 for every term
        f.numerator += (X * Y).trace() - (X * Y.inverse_det1()).trace();
    }
    return f;
}

Cplx link_q(const CyclicWord& A, const CyclicWord& B, Cplx q) {
    auto list = enumerate_crossings(A, B);
    Cplx acc = 0;
    for (Cplx c : crossing_cosines(A, B, list, q)) acc += (1.0 + c) / 4.0;
    return acc;
}

Cplx cos_q(const CyclicWord& A, const CyclicWord& B, Cplx q) {
    auto list = enumerate_crossings(A, B);
    Cplx acc = 0;
    for (Cplx c : crossing_cosines(A, B, list, q)) acc += c / 2.0;
    return acc;
}

Cplx wolpert_sum(const CyclicWord& A, const CyclicWord& B, Cplx q) {
    auto list = enumerate_crossings(A, B);
    auto cosines = crossing_cosines(A, B, list, q);
    Cplx acc = 0;
    for (size_t k = 0; k < list.size(); ++k) acc += static_cast<double>(list[k].sign) * cosines[k] / 2.0;
    return acc;
}

std::vector<Cplx> polynomial_roots(const LaurentZ& p, double tol) {
    if (p.is_zero()) throw std::invalid_argument("polynomial_roots: zero polynomial");
    const int v = p.valuation();
    const int n = p.degree() - v;
    if (n == 0) return {};
    std::vector<Cplx> coeff(n + 1);  // ascending, constant term nonzero
    double norm1 = 0;
    for (int k = 0; k <= n; ++k) {
        coeff[k] = to_double(p.coeff(v + k));
        norm1 += std::abs(coeff[k].real());
    }
    auto eval = [&](Cplx z) {
        Cplx acc = coeff[n];
        for (int k = n - 1; k >= 0; --k) acc = acc * z + coeff[k];
        return acc;
    };
    std::vector<Cplx> z(n);
    for (int k = 0; k < n; ++k) z[k] = std::polar(1.2, 2 * M_PI * k / n + 0.5);
    const Cplx lead = coeff[n];
    for (int iter = 0; iter < 500; ++iter) {
        double worst = 0;
        for (int k = 0; k < n; ++k) {
            Cplx den = lead;
            for (int j = 0; j < n; ++j)
                if (j != k) den *= z[k] - z[j];
            Cplx step = eval(z[k]) / den;
            z[k] -= step;
            worst = std::max(worst, std::abs(step));
        }
        if (worst < 1e-15) break;
    }
    std::vector<double> residuals(n);
    bool ok = true;
    for (int k = 0; k < n; ++k) {
        residuals[k] = std::abs(eval(z[k])) / (norm1 * std::pow(std::max(1.0, std::abs(z[k])), n));
        if (!(residuals[k] < tol)) ok = false;
    }
    if (!ok) {
        std::ostringstream msg;
        msg << "polynomial_roots failed to converge; residuals:";
        for (double r : residuals) msg << " " << r;
        throw std::runtime_error(msg.str());
    }
    std::sort(z.begin(), z.end(), [](Cplx a, Cplx b) {
        return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });
    return z;
}

RootReport roots(const SymbolicLinkFn& f, double tol) {
    if (f.numerator.is_zero()) throw std::invalid_argument("roots: zero numerator");
    return {polynomial_roots(f.numerator, tol), polynomial_roots(f.disc_a * f.disc_b, tol)};
}

Raster plot_grid(const CyclicWord& A, const CyclicWord& B, Cplx center, double radius, int pixels) {
    if (pixels < 16) throw std::invalid_argument("plot_grid wants at least 16 pixels per side");
    SymbolicLinkFn f = link_q_symbolic(A, B);
    Raster r;
    r.width = r.height = pixels;
    r.rgb.assign(static_cast<size_t>(pixels) * pixels * 3, 0);
    for (int py = 0; py < pixels; ++py)
        for (int px = 0; px < pixels; ++px) {
            Cplx q(center.real() + (2.0 * (px + 0.5) / pixels - 1.0) * radius,
                   center.imag() + (1.0 - 2.0 * (py + 0.5) / pixels) * radius);
            std::uint8_t* out = &r.rgb[(static_cast<size_t>(py) * pixels + px) * 3];
            Cplx denom;
            if (near_disc_zero(f.disc_a, f.disc_b, q, &denom)) {
                out[0] = out[1] = out[2] = 255;
                continue;
            }
            Cplx z = static_cast<double>(f.crossing_count) / 4.0 + f.numerator.eval(q) / (4.0 * denom);
            if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
                out[0] = out[1] = out[2] = 255;
                continue;
            }
            double m = std::abs(z);
            hsv_to_rgb(std::arg(z) / (2 * M_PI), 1.0, m / (1.0 + m), out);
        }
    return r;
}

void write_ppm(const Raster& r, std::ostream& os) {
    os << "P6\n" << r.width << " " << r.height << "\n255\n";
    os.write(reinterpret_cast<const char*>(r.rgb.data()), static_cast<std::streamsize>(r.rgb.size()));
}

PairGeometry geodesic_pair_geometry(const MatZ& A, const MatZ& B, double q) {
    if (!(q > 0)) throw std::invalid_argument("geodesic_pair_geometry wants q > 0");
    if (A.trace() * A.trace() <= 4 || B.trace() * B.trace() <= 4)
        throw std::invalid_argument("geodesic_pair_geometry wants a hyperbolic pair");
    AxesCross ac = axes_cross(A, B);  // throws on a shared endpoint
    MatLaurent aq = q_deform(A), bq = q_deform(B);
    double ta = aq.trace().eval(q).real();
    double tb = bq.trace().eval(q).real();
    double tab = (aq * bq).trace().eval(q).real();
    double tabi = (aq * bq.inverse_det1()).trace().eval(q).real();
    double sgn = ta * tb > 0 ? 1.0 : -1.0;
    double cosv = sgn * (tab - tabi) / std::sqrt((ta * ta - 4) * (tb * tb - 4));
    PairGeometry g;
    if (ac.across == 1) {
        g.crossing = true;
        g.angle = ac.sign * std::acos(std::clamp(cosv, -1.0, 1.0));
    } else {
        g.crossing = false;
        g.ortho_length = (cosv >= 0 ? 1.0 : -1.0) * std::acosh(std::max(std::abs(cosv), 1.0));
    }
    return g;
}

}  // namespace modknot
