// modknot — exact linking invariants of modular knots.
//
// Every subcommand prints one JSON object per line on stdout (CSV where a
// flag says so), so output can be piped into jq or a spreadsheet without
// scraping.  Errors go to stderr as JSON too.  Exit codes: 0 success,
// 1 computational failure (an internal cross-check tripped), 2 bad usage.

#include <atomic>
#include <complex>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "modknot/braid3.hpp"
#include "modknot/charvar.hpp"
#include "modknot/integers.hpp"
#include "modknot/linking.hpp"
#include "modknot/modgroup.hpp"
#include "modknot/qdeform.hpp"
#include "modknot/qmbasis.hpp"
#include "modknot/words.hpp"

using json = nlohmann::ordered_json;
using namespace modknot;

namespace {

void emit(const json& j) { std::cout << j.dump() << "\n"; }

json jcplx(Cplx z) { return json::array({z.real(), z.imag()}); }

json jcplx_list(const std::vector<Cplx>& v) {
    json a = json::array();
    for (Cplx z : v) a.push_back(jcplx(z));
    return a;
}

CyclicWord class_arg(const std::string& s) { return CyclicWord(parse_word(s)); }

Cplx parse_complex(const std::string& s) {
    std::size_t comma = s.find(',');
    double re = std::stod(comma == std::string::npos ? s : s.substr(0, comma));
    double im = 0.0;
    if (comma != std::string::npos) im = std::stod(s.substr(comma + 1));
    return {re, im};
}

std::string kind_name(const ConjClass& c) {
    switch (c.kind) {
        case ConjClass::Kind::Identity: return "identity";
        case ConjClass::Kind::TorsionS:
        case ConjClass::Kind::TorsionT:
        case ConjClass::Kind::TorsionT2: return "torsion";
        case ConjClass::Kind::Translation:
            return c.cycle->hyperbolic() ? "hyperbolic" : "parabolic";
    }
    return "unknown";
}

std::string rat_str(const Rat& r) {
    return Int(boost::multiprecision::numerator(r)).str() + "/" +
           Int(boost::multiprecision::denominator(r)).str();
}

Rat parse_rat(const std::string& s) {
    try {
        return Rat(s);
    } catch (const std::exception&) {
        throw std::invalid_argument("not a rational number: '" + s + "'");
    }
}

int resolve_threads(int requested) {
    if (requested > 0) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

// Runs fn(i) for i in [0, n) on `threads` workers and rethrows the first
// exception after everyone joined, so output stays attributable.
template <typename Fn>
void parallel_for(std::size_t n, int threads, Fn fn) {
    if (threads <= 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    int workers = static_cast<int>(std::min<std::size_t>(threads, n));
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i; (i = next.fetch_add(1)) < n;) {
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!first_error) first_error = std::current_exception();
                    next.store(n);
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

// ---- subcommand bodies ----------------------------------------------------

void run_reduce(const std::string& matrix_csv) {
    MatZ m = parse_matrix(matrix_csv);
    ConjClass c = reduce_to_cycle(m);
    json j{{"class", c.str()}, {"kind", kind_name(c)}};
    if (c.kind == ConjClass::Kind::Translation) {
        j["len"] = c.cycle->len();
        j["rad"] = c.cycle->rad();
    }
    emit(j);
}

void run_lk(const std::string& sa, const std::string& sb, const std::string& method) {
    CyclicWord a = class_arg(sa), b = class_arg(sb);
    if (method == "auto") {
        emit(json{{"lk", lk(a, b)}});
    } else if (method == "shift") {
        emit(json{{"shift", lk_shift(a, b)}});
    } else if (method == "slp") {
        emit(json{{"slp", lk_slp(a, b)}});
    } else if (method == "oracle") {
        emit(json{{"oracle", lk_oracle(a, b)}});
    } else {  // all
        if (!coprime(a, b)) {
            // shift and oracle need coprime classes; report the one method
            // that is defined instead of failing.
            emit(json{{"slp", lk_slp(a, b)},
                      {"note", "classes share a primitive root; only the framed method applies"}});
            return;
        }
        long s = lk_shift(a, b), p = lk_slp(a, b), o = lk_oracle(a, b);
        if (s != p || s != o)
            throw std::logic_error("linking methods disagree on (" + sa + ", " + sb + "): shift=" +
                                   std::to_string(s) + " slp=" + std::to_string(p) +
                                   " oracle=" + std::to_string(o));
        emit(json{{"shift", s}, {"slp", p}, {"oracle", o}});
    }
}

void run_linkq(const std::string& sa, const std::string& sb, const std::string& q_str,
               bool symbolic, bool want_roots, const std::string& grid_str,
               const std::string& out_path) {
    CyclicWord a = class_arg(sa), b = class_arg(sb);
    int modes = (!q_str.empty()) + symbolic + want_roots + (!grid_str.empty());
    if (modes != 1)
        throw std::invalid_argument("linkq wants exactly one of --q, --symbolic, --roots, --grid");

    if (!q_str.empty()) {
        Cplx q = parse_complex(q_str);
        emit(json{{"q", jcplx(q)},
                  {"link", jcplx(link_q(a, b, q))},
                  {"cos", jcplx(cos_q(a, b, q))}});
    } else if (symbolic) {
        SymbolicLinkFn f = link_q_symbolic(a, b);
        emit(json{{"crossings", f.crossing_count},
                  {"numerator", f.numerator.sparse_str()},
                  {"disc_a", f.disc_a.sparse_str()},
                  {"disc_b", f.disc_b.sparse_str()}});
    } else if (want_roots) {
        RootReport r = roots(link_q_symbolic(a, b));
        emit(json{{"zeros", jcplx_list(r.zeros)}, {"poles", jcplx_list(r.poles)}});
    } else {
        std::vector<double> g;
        std::stringstream ss(grid_str);
        std::string tok;
        while (std::getline(ss, tok, ',')) g.push_back(std::stod(tok));
        if (g.size() != 4)
            throw std::invalid_argument("--grid wants CENTER_RE,CENTER_IM,RADIUS,PIXELS");
        if (out_path.empty()) throw std::invalid_argument("--grid needs --out FILE");
        Raster r = plot_grid(a, b, {g[0], g[1]}, g[2], static_cast<int>(g[3]));
        std::ofstream os(out_path, std::ios::binary);
        if (!os) throw std::runtime_error("cannot open " + out_path);
        write_ppm(r, os);
        emit(json{{"written", out_path}, {"width", r.width}, {"height", r.height}});
    }
}

void run_alexander(const std::string& sa, bool check) {
    CyclicWord a = class_arg(sa);
    LaurentZ p = alexander(a);
    json j{{"alexander", p.sparse_str()}, {"pretty", p.pretty_str("t")}};
    if (check) {
        bool ok = fricke_alexander_check(a);
        j["fricke_check"] = ok;
        emit(j);
        if (!ok) throw std::logic_error("trace route disagrees with the Burau route on " + sa);
        return;
    }
    emit(j);
}

void run_fricke(const std::string& sa) {
    CyclicWord a = class_arg(sa);
    LaurentZ f = fricke_trace(a);
    emit(json{{"trace", f.sparse_str()},
              {"pretty", f.pretty_str("q")},
              {"degree", f.degree()}});
}

void run_qm_defect(const std::string& spec, int samples, int max_len, std::uint64_t seed) {
    Functional f = Functional::parse(spec);
    DefectReport r = defect(f, samples, max_len, seed);
    emit(json{{"functional", f.name()},
              {"samples", r.samples},
              {"max_len", max_len},
              {"seed", seed},
              {"max_defect", r.max_defect},
              {"witness_x", r.x.str()},
              {"witness_y", r.y.str()}});
}

void run_qm_decompose(int m, const std::string& basis_name, const std::string& values_path) {
    QmBasis basis;
    if (basis_name == "mas") {
        basis = QmBasis::Mas;
    } else if (basis_name == "cos") {
        basis = QmBasis::Cos;
    } else {
        throw std::invalid_argument("--basis wants mas or cos");
    }
    std::ifstream in(values_path);
    if (!in) throw std::invalid_argument("cannot read " + values_path);
    std::map<std::string, Rat> given;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::size_t comma = line.find(',');
        if (comma == std::string::npos)
            throw std::invalid_argument("expected 'class,value' lines, got '" + line + "'");
        std::string key = line.substr(0, comma);
        if (!given.emplace(key, parse_rat(line.substr(comma + 1))).second)
            throw std::invalid_argument("duplicate class " + key + " in " + values_path);
    }
    auto classes = basis_classes(m);
    std::vector<Rat> values;
    values.reserve(classes.size());
    for (const auto& c : classes) {
        auto it = given.find(c.str());
        if (it == given.end())
            throw std::invalid_argument("missing value for class " + c.str());
        values.push_back(it->second);
        given.erase(it);
    }
    if (!given.empty())
        throw std::invalid_argument("unexpected class " + given.begin()->first +
                                    " (not in the length-" + std::to_string(m) + " basis)");
    std::vector<Rat> coeffs = decompose(values, m, basis);
    for (std::size_t i = 0; i < classes.size(); ++i)
        std::cout << classes[i].str() << "," << rat_str(coeffs[i]) << "\n";
}

void run_corpus(int max_len, const std::string& what, const std::string& format, int threads) {
    bool csv = format == "csv";
    if (what == "table") {
        auto classes = enumerate_classes(max_len, ClassFilter::All);
        if (csv) std::cout << "class,len,mult,rad,hyperbolic,symmetric,trace,alexander\n";
        std::vector<std::string> rows(classes.size());
        parallel_for(classes.size(), resolve_threads(threads), [&](std::size_t i) {
            const CyclicWord& c = classes[i];
            long long tr = word_to_matrix(c.word()).trace().convert_to<long long>();
            std::string alex = alexander(c).sparse_str();
            if (csv) {
                std::ostringstream os;
                os << c.str() << "," << c.len() << "," << c.mult() << "," << c.rad() << ","
                   << (c.hyperbolic() ? 1 : 0) << "," << (c.symmetric() ? 1 : 0) << "," << tr
                   << ",\"" << alex << "\"";
                rows[i] = os.str();
            } else {
                rows[i] = json{{"class", c.str()},
                               {"len", c.len()},
                               {"mult", c.mult()},
                               {"rad", c.rad()},
                               {"hyperbolic", c.hyperbolic()},
                               {"symmetric", c.symmetric()},
                               {"trace", tr},
                               {"alexander", alex}}
                              .dump();
            }
        });
        for (const auto& r : rows) std::cout << r << "\n";
        return;
    }
    // pairs: every unordered pair of distinct hyperbolic primitive classes is
    // coprime, so all three linking methods apply.
    auto classes = enumerate_classes(max_len, ClassFilter::HyperbolicPrimitive);
    std::vector<std::pair<std::size_t, std::size_t>> idx;
    for (std::size_t i = 0; i < classes.size(); ++i)
        for (std::size_t j = i + 1; j < classes.size(); ++j) idx.emplace_back(i, j);
    if (csv) std::cout << "a,b,lk,intersection\n";
    std::vector<std::string> rows(idx.size());
    parallel_for(idx.size(), resolve_threads(threads), [&](std::size_t k) {
        const CyclicWord& a = classes[idx[k].first];
        const CyclicWord& b = classes[idx[k].second];
        long l = lk(a, b);
        long inter = intersection_number(a, b);
        if (csv) {
            std::ostringstream os;
            os << a.str() << "," << b.str() << "," << l << "," << inter;
            rows[k] = os.str();
        } else {
            rows[k] = json{{"a", a.str()}, {"b", b.str()}, {"lk", l}, {"intersection", inter}}
                          .dump();
        }
    });
    for (const auto& r : rows) std::cout << r << "\n";
}

// ---- selfcheck ------------------------------------------------------------

struct SuiteResult {
    std::string name;
    long checked = 0;
    bool ok = true;
    std::string detail;
};

void report(SuiteResult& r, bool cond, const std::string& what) {
    ++r.checked;
    if (!cond && r.ok) {
        r.ok = false;
        r.detail = what;
    }
}

int run_selfcheck(int max_len, double tolerance, std::uint64_t seed) {
    std::vector<SuiteResult> suites;

    {
        SuiteResult s{"reduction-roundtrip"};
        for (const auto& c : enumerate_classes(max_len, ClassFilter::All)) {
            ConjClass back = reduce_to_cycle(word_to_matrix(c.word()));
            report(s, back.kind == ConjClass::Kind::Translation && *back.cycle == c,
                   "matrix of " + c.str() + " does not reduce back");
        }
        suites.push_back(s);
    }

    auto prim = enumerate_classes(max_len, ClassFilter::HyperbolicPrimitive);
    {
        SuiteResult s{"linking-methods"};
        for (std::size_t i = 0; i < prim.size(); ++i)
            for (std::size_t j = i + 1; j < prim.size(); ++j) {
                const auto& a = prim[i];
                const auto& b = prim[j];
                long v = lk_shift(a, b);
                bool ok = v == lk_slp(a, b) && v == lk_oracle(a, b) && v == lk_shift(b, a) &&
                          lk_shift(a.transpose_class(), b.transpose_class()) == v;
                report(s, ok, "disagreement on (" + a.str() + ", " + b.str() + ")");
            }
        suites.push_back(s);
    }

    {
        // Link_q(A,B) + Link_q(A,^tB) should equal I(A,B)/2 along the whole
        // deformation family, not just at q = 1.
        SuiteResult s{"deformation-sum-rule"};
        const Cplx q0{1.4, 0.3};
        for (std::size_t i = 0; i < prim.size(); ++i)
            for (std::size_t j = i + 1; j < prim.size(); ++j) {
                const auto& a = prim[i];
                const auto& b = prim[j];
                if (b.transpose_class() == a) continue;  // Link_q(a,a) is out of scope
                Cplx sum = link_q(a, b, q0) + link_q(a, b.transpose_class(), q0);
                double want = intersection_number(a, b) / 2.0;
                report(s, std::abs(sum - want) < tolerance,
                       "sum rule off by " + std::to_string(std::abs(sum - want)) + " on (" +
                           a.str() + ", " + b.str() + ")");
            }
        suites.push_back(s);
    }

    auto hyp = enumerate_classes(max_len, ClassFilter::Hyperbolic);
    {
        SuiteResult s{"fricke-polynomials"};
        for (const auto& c : hyp) {
            LaurentZ f = fricke_trace(c);
            bool ok = f.is_reciprocal() && f.degree() == c.len() &&
                      f.eval_rational(1) == Rat(word_to_matrix(c.word()).trace());
            report(s, ok, "bad trace polynomial for " + c.str());
        }
        suites.push_back(s);
    }

    {
        SuiteResult s{"alexander-consistency"};
        for (const auto& c : hyp)
            report(s, fricke_alexander_check(c), "routes disagree on " + c.str());
        suites.push_back(s);
    }

    {
        SuiteResult s{"rademacher"};
        for (const auto& c : enumerate_classes(max_len, ClassFilter::All))
            report(s, mas(Word{Letter::R}, c) == c.rad(), "R-count mismatch on " + c.str());
        DefectReport d = defect(Functional::rad(), 200, 10, seed);
        report(s, d.max_defect <= 6,
               "cocycle bound exceeded: " + std::to_string(d.max_defect));
        suites.push_back(s);
    }

    {
        SuiteResult s{"basis-decomposition"};
        std::mt19937_64 rng(seed);
        for (int m = 1; m <= std::min(max_len, 6); ++m) {
            BasisMatrices bm = basis_matrices(m);
            report(s, matrix_det(bm.mas_rows) == 1,
                   "asymmetry matrix at length " + std::to_string(m) + " is not unimodular");
            std::vector<Rat> rad_values, random_values;
            for (const auto& c : bm.classes) {
                rad_values.emplace_back(c.rad());
                random_values.emplace_back(static_cast<long>(rng() % 19) - 9,
                                           static_cast<long>(rng() % 7) + 1);
            }
            auto coeffs = decompose(rad_values, m, QmBasis::Mas);
            bool e_r = coeffs[0] == 1;
            for (std::size_t i = 1; i < coeffs.size(); ++i) e_r = e_r && coeffs[i] == 0;
            report(s, e_r, "Rad is not the first asymmetry functional at length " +
                               std::to_string(m));
            report(s, recombine(decompose(random_values, m, QmBasis::Mas), m, QmBasis::Mas) ==
                          random_values,
                   "round trip failed at length " + std::to_string(m));
        }
        suites.push_back(s);
    }

    bool all_ok = true;
    for (const auto& s : suites) {
        json j{{"suite", s.name}, {"checked", s.checked}, {"ok", s.ok}};
        if (!s.ok) j["detail"] = s.detail;
        emit(j);
        all_ok = all_ok && s.ok;
    }
    emit(json{{"selfcheck", all_ok ? "ok" : "failed"}});
    return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact linking invariants of modular knots"};
    app.require_subcommand(1);

    int exit_code = 0;

    // reduce
    auto* reduce = app.add_subcommand("reduce", "conjugacy class of an integer matrix");
    std::string matrix_csv;
    reduce->add_option("--matrix", matrix_csv, "entries a,b,c,d of a determinant-1 matrix")
        ->required();
    reduce->callback([&] { run_reduce(matrix_csv); });

    // lk
    auto* lk_cmd = app.add_subcommand("lk", "linking number of two hyperbolic classes");
    std::string lk_a, lk_b, lk_method = "auto";
    lk_cmd->add_option("A", lk_a, "first class, a word in L and R")->required();
    lk_cmd->add_option("B", lk_b, "second class")->required();
    lk_cmd->add_option("--method", lk_method, "shift, slp, oracle, or all (default: auto)")
        ->check(CLI::IsMember({"auto", "shift", "slp", "oracle", "all"}));
    lk_cmd->callback([&] { run_lk(lk_a, lk_b, lk_method); });

    // intersection
    auto* inter = app.add_subcommand("intersection", "geometric intersection number");
    std::string in_a, in_b;
    inter->add_option("A", in_a)->required();
    inter->add_option("B", in_b)->required();
    inter->callback([&] {
        emit(json{{"intersection", intersection_number(class_arg(in_a), class_arg(in_b))}});
    });

    // rad
    auto* rad_cmd = app.add_subcommand("rad", "Rademacher number of a class");
    std::string rad_a;
    rad_cmd->add_option("A", rad_a)->required();
    rad_cmd->callback([&] { emit(json{{"rad", class_arg(rad_a).rad()}}); });

    // cosa
    auto* cosa_cmd = app.add_subcommand("cosa", "linking asymmetry lk(A,B) - lk(A,~B)");
    std::string cosa_a, cosa_b;
    cosa_cmd->add_option("A", cosa_a, "primitive class")->required();
    cosa_cmd->add_option("B", cosa_b)->required();
    cosa_cmd->callback(
        [&] { emit(json{{"cosa", cos_a(class_arg(cosa_a), class_arg(cosa_b))}}); });

    // linkq
    auto* linkq_cmd = app.add_subcommand("linkq", "linking function along the deformation family");
    std::string lq_a, lq_b, lq_q, lq_grid, lq_out;
    bool lq_symbolic = false, lq_roots = false;
    linkq_cmd->add_option("A", lq_a)->required();
    linkq_cmd->add_option("B", lq_b)->required();
    linkq_cmd->add_option("--q", lq_q, "evaluate at q = RE or RE,IM");
    linkq_cmd->add_flag("--symbolic", lq_symbolic, "print the closed form");
    linkq_cmd->add_flag("--roots", lq_roots, "zeros and poles of the closed form");
    linkq_cmd->add_option("--grid", lq_grid, "sample |cos| on CENTER_RE,CENTER_IM,RADIUS,PIXELS");
    linkq_cmd->add_option("--out", lq_out, "PPM file for --grid");
    linkq_cmd->callback(
        [&] { run_linkq(lq_a, lq_b, lq_q, lq_symbolic, lq_roots, lq_grid, lq_out); });

    // alexander
    auto* alex_cmd = app.add_subcommand("alexander", "Alexander polynomial of the closed braid");
    std::string alex_a;
    bool alex_check = false;
    alex_cmd->add_option("A", alex_a)->required();
    alex_cmd->add_flag("--check", alex_check, "also verify against the trace polynomial");
    alex_cmd->callback([&] { run_alexander(alex_a, alex_check); });

    // fricke
    auto* fricke_cmd = app.add_subcommand("fricke", "trace polynomial of the deformed class");
    std::string fricke_a;
    fricke_cmd->add_option("A", fricke_a)->required();
    fricke_cmd->callback([&] { run_fricke(fricke_a); });

    // qm
    auto* qm_cmd = app.add_subcommand("qm", "quasi-morphism defects and basis decompositions");
    std::string qm_defect, qm_basis = "mas", qm_values;
    int qm_samples = 500, qm_max_len = 12, qm_m = 0;
    std::uint64_t qm_seed = 0;
    qm_cmd->add_option("--defect", qm_defect, "sample the defect of rad, mas:WORD, or cos:WORD");
    qm_cmd->add_option("--samples", qm_samples, "random pairs to draw (default 500)");
    qm_cmd->add_option("--max-len", qm_max_len, "word length of the random elements")
        ->check(CLI::Range(1, 12));
    qm_cmd->add_option("--seed", qm_seed, "RNG seed (default 0)");
    qm_cmd->add_option("--decompose", qm_m, "express values on the length-m basis classes");
    qm_cmd->add_option("--basis", qm_basis, "mas or cos (default mas)");
    qm_cmd->add_option("--values", qm_values, "CSV file of class,value lines");
    qm_cmd->callback([&] {
        if (!qm_defect.empty() && qm_m == 0) {
            run_qm_defect(qm_defect, qm_samples, qm_max_len, qm_seed);
        } else if (qm_defect.empty() && qm_m > 0) {
            if (qm_values.empty()) throw std::invalid_argument("--decompose needs --values FILE");
            run_qm_decompose(qm_m, qm_basis, qm_values);
        } else {
            throw std::invalid_argument("qm wants exactly one of --defect or --decompose");
        }
    });

    // corpus
    auto* corpus_cmd = app.add_subcommand("corpus", "sweep invariants over all short classes");
    int corpus_len = 5, corpus_threads = 0;
    std::string corpus_emit = "pairs", corpus_format = "json";
    corpus_cmd->add_option("--max-len", corpus_len, "largest class length (default 5)")
        ->check(CLI::Range(1, 12));
    corpus_cmd->add_option("--emit", corpus_emit, "pairs or table")
        ->check(CLI::IsMember({"pairs", "table"}));
    corpus_cmd->add_option("--format", corpus_format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    corpus_cmd->add_option("--threads", corpus_threads, "worker threads (default: all cores)")
        ->envname("MODKNOT_THREADS");
    corpus_cmd->callback(
        [&] { run_corpus(corpus_len, corpus_emit, corpus_format, corpus_threads); });

    // selfcheck
    auto* self_cmd = app.add_subcommand("selfcheck", "cross-validate the invariants");
    int self_len = 5;
    double self_tol = 1e-9;
    std::uint64_t self_seed = 0;
    self_cmd->add_option("--max-len", self_len, "largest class length (default 5)")
        ->check(CLI::Range(2, 12));
    self_cmd->add_option("--tolerance", self_tol, "numeric comparison tolerance")
        ->check(CLI::PositiveNumber);
    self_cmd->add_option("--seed", self_seed, "RNG seed for the sampled checks");
    self_cmd->callback([&] { exit_code = run_selfcheck(self_len, self_tol, self_seed); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << json{{"error", e.what()}, {"code", 2}}.dump() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << json{{"error", e.what()}, {"code", 2}}.dump() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << json{{"error", e.what()}, {"code", 2}}.dump() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << json{{"error", e.what()}, {"code", 1}}.dump() << "\n";
        return 1;
    }
    return exit_code;
}
