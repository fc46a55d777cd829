#include "modknot/qmbasis.hpp"

#include <algorithm>
#include <cstdlib>
#include <future>
#include <random>
#include <stdexcept>
#include <thread>
#include <utility>

#include "modknot/linking.hpp"

namespace modknot {

namespace {

// Fraction-free elimination with row pivoting on an n x cols integer matrix;
// reduces in place to upper triangular form and returns the determinant of
// the leading n x n block.  All intermediate divisions are exact.
Int eliminate(std::vector<std::vector<Int>>& a, int n, int cols) {
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n; ++k) {
        int piv = -1;
        for (int r = k; r < n && piv < 0; ++r)
            if (a[r][k] != 0) piv = r;
        if (piv < 0) return 0;
        if (piv != k) {
            std::swap(a[piv], a[k]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < cols; ++j) a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

MatZ random_element(std::mt19937_64& rng, int max_len) {
    std::uniform_int_distribution<int> len_dist(1, max_len);
    std::uniform_int_distribution<int> gen_dist(0, 3);
    MatZ m = MatZ::identity();
    const int n = len_dist(rng);
    for (int i = 0; i < n; ++i) {
        switch (gen_dist(rng)) {
            case 0: m = m * mat_L(); break;
            case 1: m = m * mat_R(); break;
            case 2: m = m * mat_L().inverse(); break;
            default: m = m * mat_R().inverse(); break;
        }
    }
    return m;
}

}  // namespace

long mas(const Word& p, const CyclicWord& a) {
    if (p.empty()) throw std::invalid_argument("mas wants a nonempty pattern");
    return occ(p, a) - occ(transpose(p), a);
}

bool self_overlapping(const Word& p) {
    for (size_t k = 1; k < p.size(); ++k)
        if (std::equal(p.begin(), p.begin() + k, p.end() - k)) return true;
    return false;
}

Functional::Functional(Kind k, Word p, std::optional<CyclicWord> b, std::string n)
    : kind_(k), pattern_(std::move(p)), base_(std::move(b)), name_(std::move(n)) {}

Functional Functional::rad() { return Functional(Kind::Rad, {}, std::nullopt, "rad"); }

Functional Functional::mas_of(const Word& p) {
    if (p.empty()) throw std::invalid_argument("mas functional wants a nonempty pattern");
    return Functional(Kind::Mas, p, std::nullopt, "mas:" + to_string(p));
}

Functional Functional::cos_of(const CyclicWord& a) {
    if (!a.is_primitive()) throw std::invalid_argument("cos functional wants a primitive class");
    return Functional(Kind::Cos, {}, a, "cos:" + a.str());
}

Functional Functional::parse(const std::string& spec) {
    if (spec == "rad") return rad();
    if (spec.rfind("mas:", 0) == 0) return mas_of(parse_word(spec.substr(4)));
    if (spec.rfind("cos:", 0) == 0) return cos_of(CyclicWord(spec.substr(4)));
    throw std::invalid_argument("unknown functional '" + spec + "' (want rad, mas:WORD or cos:WORD)");
}

long Functional::eval(const CyclicWord& a) const {
    switch (kind_) {
        case Kind::Rad: return a.rad();
        case Kind::Mas: return mas(pattern_, a);
        case Kind::Cos: return cos_a(*base_, a);
    }
    return 0;
}

long Functional::eval(const MatZ& m) const {
    ConjClass c = reduce_to_cycle(m);
    return c.cycle ? eval(*c.cycle) : 0;
}

DefectReport defect(const Functional& f, int samples, int max_len, std::uint64_t seed) {
    if (samples < 1) throw std::invalid_argument("defect wants at least one sample");
    if (max_len < 1) throw std::invalid_argument("defect wants a positive sample length");
    std::mt19937_64 rng(seed);
    DefectReport rep;
    rep.samples = samples;
    for (int s = 0; s < samples; ++s) {
        MatZ x = random_element(rng, max_len);
        MatZ y = random_element(rng, max_len);
        long d = std::labs(f.eval(x) + f.eval(y) - f.eval(x * y));
        if (d > rep.max_defect) {
            rep.max_defect = d;
            rep.x = x;
            rep.y = y;
        }
    }
    return rep;
}

std::vector<CyclicWord> basis_classes(int m) {
    if (m < 1) throw std::invalid_argument("basis_classes wants m >= 1");
    return enumerate_classes(m, ClassFilter::LyndonPositive);
}

BasisMatrices basis_matrices(int m) {
    BasisMatrices bm;
    bm.classes = basis_classes(m);
    const int n = static_cast<int>(bm.classes.size());
    bm.mas_rows.assign(n, {});
    bm.cos_rows.assign(n, {});
    auto build_row = [&bm, n](int i) {
        std::vector<long> mr(n), cr(n);
        for (int j = 0; j < n; ++j) {
            mr[j] = mas(bm.classes[i].word(), bm.classes[j]);
            cr[j] = cos_a(bm.classes[i], bm.classes[j]);
        }
        bm.mas_rows[i] = std::move(mr);
        bm.cos_rows[i] = std::move(cr);
    };
    const int hw = std::max(1u, std::thread::hardware_concurrency());
    if (n >= 16 && hw > 1) {
        std::vector<std::future<void>> tasks;
        for (int t = 0; t < hw; ++t)
            tasks.push_back(std::async(std::launch::async, [&build_row, t, hw, n] {
                for (int i = t; i < n; i += hw) build_row(i);
            }));
        for (auto& t : tasks) t.get();
    } else {
        for (int i = 0; i < n; ++i) build_row(i);
    }
    return bm;
}

Int matrix_det(const std::vector<std::vector<long>>& m) {
    const int n = static_cast<int>(m.size());
    if (n == 0) return 1;
    std::vector<std::vector<Int>> a(n, std::vector<Int>(n));
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(m[i].size()) != n) throw std::invalid_argument("matrix_det wants a square matrix");
        for (int j = 0; j < n; ++j) a[i][j] = m[i][j];
    }
    return eliminate(a, n, n);
}

namespace {

const std::vector<std::vector<long>>& pick_rows(const BasisMatrices& bm, QmBasis basis) {
    return basis == QmBasis::Mas ? bm.mas_rows : bm.cos_rows;
}

}  // namespace

std::vector<Rat> decompose(const std::vector<Rat>& values, int m, QmBasis basis) {
    BasisMatrices bm = basis_matrices(m);
    const auto& rows = pick_rows(bm, basis);
    const int n = static_cast<int>(bm.classes.size());
    if (static_cast<int>(values.size()) != n)
        throw std::invalid_argument("decompose wants one value per basis class");

    Int scale = 1;
    for (const Rat& v : values) scale = boost::multiprecision::lcm(scale, Int(boost::multiprecision::denominator(v)));
    // unknowns are the row coefficients, so the system matrix is the transpose
    std::vector<std::vector<Int>> a(n, std::vector<Int>(n + 1));
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) a[j][i] = rows[i][j];
        a[j][n] = boost::multiprecision::numerator(values[j] * Rat(scale));
    }
    if (eliminate(a, n, n + 1) == 0) throw std::logic_error("singular basis matrix");
    std::vector<Rat> c(n);
    for (int i = n - 1; i >= 0; --i) {
        Rat s(a[i][n]);
        for (int j = i + 1; j < n; ++j) s -= Rat(a[i][j]) * c[j];
        c[i] = s / Rat(a[i][i]);
    }
    for (Rat& v : c) v /= Rat(scale);
    return c;
}

std::vector<Rat> recombine(const std::vector<Rat>& coeffs, int m, QmBasis basis) {
    BasisMatrices bm = basis_matrices(m);
    const auto& rows = pick_rows(bm, basis);
    const int n = static_cast<int>(bm.classes.size());
    if (static_cast<int>(coeffs.size()) != n)
        throw std::invalid_argument("recombine wants one coefficient per basis class");
    std::vector<Rat> out(n, Rat(0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out[j] += coeffs[i] * Rat(rows[i][j]);
    return out;
}

}  // namespace modknot
