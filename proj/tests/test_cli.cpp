#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

// Drives the installed binary end to end through a shell, so these tests see
// exactly what a user sees: argv parsing, JSON framing, exit codes.

namespace {

struct RunResult {
    int exit_code;
    std::string out;  // stdout and stderr interleaved
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(MODKNOT_CLI_PATH) + " " + args + " 2>&1";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
    int status = pclose(p);
    return {WEXITSTATUS(status), out};
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("matrix reduction") {
    auto r = run("reduce --matrix 3,-1,1,0");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "\"class\":\"RL\""));
    CHECK(contains(r.out, "\"kind\":\"hyperbolic\""));

    CHECK(contains(run("reduce --matrix 1,0,0,1").out, "\"kind\":\"identity\""));
    CHECK(contains(run("reduce --matrix 0,-1,1,0").out, "\"kind\":\"torsion\""));
    CHECK(contains(run("reduce --matrix 1,1,0,1").out, "\"kind\":\"parabolic\""));
}

TEST_CASE("linking subcommands") {
    auto all = run("lk RLL RRL --method all");
    CHECK(all.exit_code == 0);
    CHECK(all.out == "{\"shift\":1,\"slp\":1,\"oracle\":1}\n");

    CHECK(run("lk RLL RRL").out == "{\"lk\":1}\n");
    CHECK(run("intersection RLL RRL").out == "{\"intersection\":6}\n");
    CHECK(run("rad RRRL").out == "{\"rad\":2}\n");
    CHECK(run("cosa RRL RRRL").out == "{\"cosa\":1}\n");

    // powers of a common root: only the framed method applies
    auto power = run("lk RLRL RL --method all");
    CHECK(power.exit_code == 0);
    CHECK(contains(power.out, "\"slp\":2"));
    CHECK(contains(power.out, "note"));
}

TEST_CASE("exit codes") {
    CHECK(run("lk RLX RRL").exit_code == 2);        // not a word
    CHECK(run("lk RR RL").exit_code == 2);          // parabolic argument
    CHECK(run("nonsense").exit_code == 2);          // unknown subcommand
    CHECK(run("lk RLL").exit_code == 2);            // missing argument
    CHECK(run("corpus --max-len 40").exit_code == 2);
    CHECK(run("--help").exit_code == 0);

    auto bad = run("lk RLX RRL");
    CHECK(contains(bad.out, "\"error\""));
    CHECK(contains(bad.out, "\"code\":2"));
}

TEST_CASE("polynomial subcommands") {
    auto alex = run("alexander RRRL --check");
    CHECK(alex.exit_code == 0);
    CHECK(contains(alex.out, "\"alexander\":\"1:2 -1:1 1:0\""));
    CHECK(contains(alex.out, "\"fricke_check\":true"));

    auto fricke = run("fricke RL");
    CHECK(fricke.exit_code == 0);
    CHECK(contains(fricke.out, "\"degree\":2"));

    auto sym = run("linkq RLL RRL --symbolic");
    CHECK(sym.exit_code == 0);
    CHECK(contains(sym.out, "\"crossings\":6"));
}

TEST_CASE("corpus output is deterministic across thread counts") {
    auto a = run("corpus --max-len 5 --emit pairs --threads 1");
    auto b = run("corpus --max-len 5 --emit pairs --threads 3");
    auto c = run("corpus --max-len 5 --emit pairs --threads 3");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(b.out == c.out);
    CHECK(contains(a.out, "{\"a\":\"RL\",\"b\":\"RLL\",\"lk\":1,\"intersection\":4}"));

    auto table = run("corpus --max-len 3 --emit table --format csv");
    CHECK(contains(table.out, "class,len,mult,rad,hyperbolic,symmetric,trace,alexander"));
    CHECK(contains(table.out, "RRL,3,1,1,1,0,4,"));
}

TEST_CASE("grid plotting writes a portable pixmap") {
    const char* path = "test_cli_grid.ppm";
    auto r = run(std::string("linkq RLL RRL --grid 0,0,1.2,16 --out ") + path);
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "\"written\""));
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::string header(9, '\0');
    in.read(header.data(), 9);
    CHECK(header == "P6\n16 16\n");
    in.close();
    std::remove(path);

    CHECK(run("linkq RLL RRL --grid 0,0,1.2,16").exit_code == 2);  // --out missing
}

TEST_CASE("quasi-morphism subcommands") {
    auto d = run("qm --defect rad --samples 200 --seed 7");
    CHECK(d.exit_code == 0);
    CHECK(contains(d.out, "\"functional\":\"rad\""));
    CHECK(contains(d.out, "\"max_defect\""));
    CHECK(d.out == run("qm --defect rad --samples 200 --seed 7").out);

    const char* path = "test_cli_vals.csv";
    {
        std::ofstream out(path);
        out << "R,1\nRRL,1\nRRRL,2\n";  // the Rademacher numbers of the length-4 basis
    }
    auto dec = run(std::string("qm --decompose 4 --basis mas --values ") + path);
    CHECK(dec.exit_code == 0);
    CHECK(dec.out == "R,1/1\nRRL,0/1\nRRRL,0/1\n");
    std::remove(path);

    CHECK(run("qm --decompose 4 --basis mas --values no_such_file.csv").exit_code == 2);
}

TEST_CASE("selfcheck passes") {
    auto r = run("selfcheck --max-len 4");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "\"selfcheck\":\"ok\""));
    CHECK(contains(r.out, "\"suite\":\"linking-methods\""));
}
