#include "doctest.h"
#include "torus/io.hpp"

#include <cstdio>
#include <cstring>

using namespace torus;

TEST_CASE("number formatting") {
    CHECK(format_double(1.0) == "1.0000000000000000e+00");
    CHECK(format_double(-0.0) == "0.0000000000000000e+00");
    const double x = 0.1 + 0.2;
    CHECK(std::strtod(format_double(x).c_str(), nullptr) == x);
}

TEST_CASE("operator JSON round trip is bit-exact") {
    const OperatorMatrix f = build_fourier_operator(Dimension(7));
    const std::string text = operator_to_json(f).dump();
    const OperatorMatrix back = operator_from_json(json::parse(text));
    CHECK(back.dim.value() == 7);
    CHECK(back.entries == f.entries);
    CHECK(back.provenance == f.provenance);
}

TEST_CASE("state JSON round trip") {
    std::mt19937_64 rng(1);
    const StateVector s = random_state(Dimension(5), rng);
    const StateVector back = state_from_json(json::parse(state_to_json(s).dump()));
    CHECK(back.amplitudes == s.amplitudes);
    CHECK(back.basis == s.basis);

    json bad = state_to_json(s);
    bad["basis"] = "sideways";
    try {
        state_from_json(bad);
        FAIL("no throw");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::UnsupportedBasis);
    }
    bad = state_to_json(s);
    bad["amplitudes"].erase(0);
    CHECK_THROWS_AS(state_from_json(bad), Error);
}

TEST_CASE("csv layouts") {
    const Dimension d3(3);
    const std::string csv = wigner_csv(wigner_function(basis_state(d3, Basis::U, 0)));
    CHECK(csv.rfind("V1,V2,W\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 10);
    CHECK(csv.find("\n0,1,") != std::string::npos);

    const std::string np = wigner_csv(wigner_number_phase(basis_state(d3, Basis::Number, 1)));
    CHECK(np.rfind("J,theta,W\n", 0) == 0);

    const std::string op = operator_csv(build_shift_operator(d3));
    CHECK(op.rfind("row,col,re,im\n", 0) == 0);
    CHECK(op.find("1,0,1.0000000000000000e+00,0.0000000000000000e+00") != std::string::npos);

    const std::string sp = spectrum_csv(build_q_oscillator(d3, {1, 0}, {0, 1}));
    CHECK(sp.find("1,1.5470053837925") != std::string::npos);
}

TEST_CASE("state specifiers") {
    const Dimension d5(5);
    CHECK(parse_state_spec(d5, "fock:2").amplitudes == basis_state(d5, Basis::Number, 2).amplitudes);
    CHECK(parse_state_spec(d5, "number:7").amplitudes == basis_state(d5, Basis::Number, 2).amplitudes);
    CHECK(parse_state_spec(d5, "phase:1").amplitudes == basis_state(d5, Basis::Phase, 1).amplitudes);
    CHECK(parse_state_spec(d5, "v:3").amplitudes == basis_state(d5, Basis::V, 3).amplitudes);
    CHECK(parse_state_spec(d5, "random:42").amplitudes == parse_state_spec(d5, "random:42").amplitudes);
    CHECK(parse_state_spec(d5, "random:42").amplitudes != parse_state_spec(d5, "random:43").amplitudes);
    for (const char* bad : {"fock", "fock:", "fock:x", "fock:1.5", "spin:1"}) {
        try {
            parse_state_spec(d5, bad);
            FAIL("no throw for " << bad);
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::InvalidArgument);
        }
    }
    CHECK_THROWS_AS(parse_state_spec(d5, "file:/nonexistent/state.json"), IoError);
}

TEST_CASE("state file round trip") {
    const Dimension d3(3);
    const StateVector s = basis_state(d3, Basis::V, 1);
    const std::string path = "test_io_state.json";
    write_text(path, state_to_json(s).dump());
    const StateVector back = parse_state_spec(d3, "file:" + path);
    CHECK(max_abs(Vector(back.amplitudes - s.amplitudes)) < 1e-15);
    CHECK_THROWS_AS(parse_state_spec(Dimension(5), "file:" + path), Error);
    std::remove(path.c_str());
}

TEST_CASE("write failures") {
    CHECK_THROWS_AS(write_text("/nonexistent-dir/out.json", "x"), IoError);
    CHECK_THROWS_AS(read_text("/nonexistent-dir/in.json"), IoError);
}
