#include "doctest.h"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args) {
    const std::string cmd = std::string(TORUS_CLI_PATH) + " " + args + " 2>/dev/null";
    Run r;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
    const int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string run_stderr(const std::string& args) {
    const std::string cmd = std::string(TORUS_CLI_PATH) + " " + args + " 2>&1 >/dev/null";
    std::string out;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
    pclose(p);
    return out;
}

}  // namespace

TEST_CASE("gen") {
    const Run f = run("gen --d 2 --kind fourier");
    CHECK(f.code == 0);
    CHECK(f.out.find("0.7071067811865475") != std::string::npos);
    CHECK(f.out.find("-0.7071067811865475") != std::string::npos);

    CHECK(run("gen --d 3 --kind schwinger --m 1,1 --out cli_s.json").code == 0);
    FILE* fp = std::fopen("cli_s.json", "r");
    CHECK(fp != nullptr);
    if (fp) std::fclose(fp);
    std::remove("cli_s.json");

    CHECK(run("gen --d 4 --kind u").code == 0);
    CHECK(run_stderr("gen --d 4 --kind u").find("not prime") != std::string::npos);
    CHECK(run("gen --d 3 --kind schwinger").code == 2);
}

TEST_CASE("verify") {
    CHECK(run("verify --d 5 --suite all --tol 1e-10").code == 0);
    const Run four = run("verify --d 4 --suite schwinger");
    CHECK(four.code == 0);
    CHECK(run_stderr("verify --d 4 --suite schwinger").find("reducible") != std::string::npos);
    CHECK(run("verify --d 7 --suite qosc --samples 200").code == 0);
    // an impossible tolerance fails the gate
    CHECK(run("verify --d 5 --suite schwinger --tol 1e-300").code == 1);
    const Run js = run("verify --d 3 --suite wigner --format json");
    CHECK(js.code == 0);
    CHECK(js.out.find("\"passed\": true") != std::string::npos);
}

TEST_CASE("wigner") {
    const Run n = run("wigner --d 31 --state fock:3 --basis number-phase");
    CHECK(n.code == 0);
    CHECK(n.out.rfind("J,theta,W\n", 0) == 0);
    CHECK(n.out.find("\n3,0.0000000000000000e+00,1.59154943091895") != std::string::npos);

    const Run u = run("wigner --d 3 --state u:0 --basis torus");
    CHECK(u.code == 0);
    CHECK(u.out.rfind("V1,V2,W\n", 0) == 0);

    const Run d = run("wigner --d 5 --state random:42 --decompose");
    CHECK(d.code == 0);
    CHECK(d.out.find("J,theta,W_even,W_odd,W") != std::string::npos);
    CHECK(d.out.rfind("# state=random:42", 0) == 0);

    CHECK(run("wigner --d 5 --state bogus:1").code == 2);
}

TEST_CASE("spectrum, index, transform") {
    const Run s = run("spectrum --d 3 --m 1,0 --mp 0,1");
    CHECK(s.code == 0);
    CHECK(s.out.find("0,2.15470053837925") != std::string::npos);
    CHECK(s.out.find("1,1.5470053837925") != std::string::npos);
    CHECK(s.out.find("2,1.15470053837925") != std::string::npos);

    const Run i = run("index --d 5 --case linear");
    CHECK(i.code == 0);
    CHECK(i.out.find("\"I\": 0.448") != std::string::npos);

    const Run t = run("transform --d 5 --r 0,-1,1,0");
    CHECK(t.code == 0);
    CHECK(t.out.find("\"fourier_residual\"") != std::string::npos);
    CHECK(run("transform --d 5 --r 2,0,0,1").code == 2);
    CHECK(run("transform --d 5 --r 1,2,3").code == 2);
}

TEST_CASE("converge") {
    const Run c = run("converge --primes 11,23,47 --observable E_N");
    CHECK(c.code == 0);
    CHECK(c.out.rfind("D,residual\n11,", 0) == 0);
    CHECK(run("converge --primes 11,12").code == 2);
}

TEST_CASE("exit codes and determinism") {
    CHECK(run("").code == 2);
    CHECK(run("frobnicate").code == 2);
    CHECK(run("verify --d 0").code == 2);
    CHECK(run("gen --d 3 --kind u --out /nonexistent-dir/x.json").code == 3);
    CHECK(run("wigner --d 3 --state file:/nonexistent-dir/s.json").code == 3);
    const Run a = run("wigner --d 7 --state random:9");
    const Run b = run("wigner --d 7 --state random:9");
    CHECK(a.out == b.out);
    CHECK(run("verify --d 5 --suite all --format csv").out == run("verify --d 5 --suite all --format csv").out);
}
