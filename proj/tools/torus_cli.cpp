// torus: command-line front end for the finite phase-space toolkit.

#include "torus/io.hpp"
#include "torus/suites.hpp"

#include "CLI11.hpp"

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <sstream>

using namespace torus;

namespace {

enum Exit { Ok = 0, VerifyFailed = 1, Usage = 2, IoFailure = 3 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

LatticeVector parse_vector(const std::string& s) {
    std::istringstream is(s);
    long long a = 0, b = 0;
    char comma = 0;
    if (!(is >> a >> comma >> b) || comma != ',' || !(is >> std::ws).eof()) throw UsageError("expected a,b but got '" + s + "'");
    return {a, b};
}

std::vector<long long> parse_list(const std::string& s) {
    std::vector<long long> out;
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoll(tok, &used));
            if (used != tok.size()) throw UsageError("bad integer '" + tok + "'");
        } catch (const std::logic_error&) {
            throw UsageError("bad integer '" + tok + "'");
        }
    }
    return out;
}

Dimension make_dimension(int d) {
    const Dimension dim(d);
    if (!dim.is_prime()) std::cerr << "warning: D = " << d << " is not prime; representations are reducible\n";
    return dim;
}

double default_tol() {
    if (const char* env = std::getenv("TORUS_TOL")) {
        char* end = nullptr;
        const double v = std::strtod(env, &end);
        if (end != env && *end == '\0' && v > 0) return v;
        std::cerr << "warning: ignoring malformed TORUS_TOL='" << env << "'\n";
    }
    return 1e-10;
}

void emit(const std::string& out, const std::string& text) {
    if (out.empty() || out == "-") {
        std::cout << text;
        std::cout.flush();
    } else {
        write_text(out, text);
    }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

struct Common {
    int d = 0;
    std::string out;
    std::string format = "json";
};

void add_common(CLI::App* app, Common& c, const std::string& default_format) {
    c.format = default_format;
    app->add_option("--d", c.d, "Hilbert-space dimension D")->required()->check(CLI::Range(1, 100000));
    app->add_option("--out", c.out, "output path (default: standard output)");
    app->add_option("--format", c.format, "output format")->check(CLI::IsMember({"json", "csv"}));
}

int cmd_gen(const Common& c, const std::string& kind, const std::string& m, const std::string& pair) {
    const Dimension dim = make_dimension(c.d);
    OperatorMatrix op{dim, {}, ""};
    if (kind == "u") op = build_shift_operator(dim);
    else if (kind == "v") op = build_clock_operator(dim);
    else if (kind == "fourier") op = build_fourier_operator(dim);
    else if (kind == "phase") op = build_phase_pair(dim).E_phi;
    else if (kind == "number-exp") op = build_phase_pair(dim).E_N;
    else if (kind == "schwinger") {
        if (m.empty()) throw UsageError("--m is required for --kind schwinger");
        op = build_schwinger(dim, parse_vector(m), pair == "number-phase" ? Pair::NumberPhase : Pair::ClockShift).op;
    }
    emit(c.out, c.format == "csv" ? operator_csv(op) : dump(operator_to_json(op)));
    return Ok;
}

int cmd_verify(int d, const std::string& suite, const SuiteOptions& opt, const std::string& format) {
    const Dimension dim = make_dimension(d);
    const SuiteReport rep = run_suite(suite, dim, opt);
    for (const auto& w : rep.warnings) std::cerr << "warning: " << w << "\n";
    if (format == "json") {
        json checks = json::array();
        for (const auto& c : rep.checks)
            checks.push_back({{"name", c.name}, {"residual", c.residual}, {"tol", c.tol}, {"gated", c.gated}, {"passed", c.passed()}});
        std::cout << dump({{"D", d}, {"suite", rep.suite}, {"seed", opt.seed}, {"samples", opt.samples}, {"passed", rep.passed()},
                           {"checks", checks}, {"warnings", rep.warnings}});
    } else if (format == "csv") {
        std::cout << "check,residual,tol,gated,status\n";
        for (const auto& c : rep.checks)
            std::cout << c.name << ',' << format_double(c.residual) << ',' << format_double(c.tol) << ',' << (c.gated ? 1 : 0) << ','
                      << (c.passed() ? "pass" : "FAIL") << '\n';
    } else {
        std::printf("suite %s  D=%d  seed=%llu  samples=%d\n", rep.suite.c_str(), d, static_cast<unsigned long long>(opt.seed), opt.samples);
        std::printf("%-44s %-24s %-10s %s\n", "check", "residual", "tol", "status");
        for (const auto& c : rep.checks)
            std::printf("%-44s %-24s %-10.1e %s\n", c.name.c_str(), format_double(c.residual).c_str(), c.tol,
                        c.passed() ? (c.gated ? "pass" : "info") : "FAIL");
        std::printf("%s\n", rep.passed() ? "PASS" : "FAIL");
    }
    std::cout.flush();
    return rep.passed() ? Ok : VerifyFailed;
}

int cmd_wigner(const Common& c, const std::string& spec, const std::string& basis, bool decompose, bool half) {
    const Dimension dim = make_dimension(c.d);
    const StateVector psi = parse_state_spec(dim, spec);
    const std::string header = spec.rfind("random:", 0) == 0 ? "# state=" + spec + " D=" + std::to_string(c.d) + "\n" : "";
    if (decompose) {
        const EvenOddDecomposition e = wigner_even_odd_decomposition(psi);
        if (c.format == "csv") {
            emit(c.out, header + even_odd_csv(e));
        } else {
            json j = {{"state", spec}, {"even", wigner_to_json(e.even)}, {"odd", wigner_to_json(e.odd)}, {"full", wigner_to_json(e.full)},
                      {"reconstruction_residual", e.reconstruction}, {"even_mass", e.even_mass}, {"odd_mass", e.odd_mass}};
            emit(c.out, dump(j));
        }
        return Ok;
    }
    const WignerGrid g = basis == "torus" ? wigner_function(psi, spec) : wigner_number_phase(psi, half, spec);
    emit(c.out, c.format == "csv" ? header + wigner_csv(g) : dump(wigner_to_json(g)));
    return Ok;
}

int cmd_spectrum(const Common& c, const std::string& m, const std::string& mp, const std::string& pair) {
    const Dimension dim = make_dimension(c.d);
    const QOscillator o = build_q_oscillator(dim, parse_vector(m), parse_vector(mp), pair == "number-phase" ? Pair::NumberPhase : Pair::ClockShift);
    emit(c.out, c.format == "csv" ? spectrum_csv(o) : dump(spectrum_to_json(o)));
    return Ok;
}

int cmd_index(const Common& c, const std::string& which, int sign, long long cross) {
    const Dimension dim = make_dimension(c.d);
    const ProfileCase tag = profile_case_from_string(which);
    SpectrumProfile p;
    if (tag == ProfileCase::UnitCross || tag == ProfileCase::QuarterCross) p = limiting_spectrum(dim, tag, sign);
    else p = make_profile(c.d, tag, sign, cross);
    if (c.format == "csv") {
        std::ostringstream os;
        os << "D,case,I,f0,fD\n"
           << p.D << ',' << to_string(p.tag) << ',' << format_double(p.index) << ',' << format_double(p.formula(0)) << ','
           << format_double(p.formula(p.D)) << '\n';
        emit(c.out, os.str());
    } else {
        emit(c.out, dump(index_to_json(p)));
    }
    return Ok;
}

int cmd_converge(const std::string& primes_s, const std::string& observable, double gamma, const std::string& family,
                 const std::string& format, const std::string& out) {
    std::vector<int> primes;
    for (long long p : parse_list(primes_s)) {
        if (p < 1 || p > 100000) throw UsageError("dimension out of range");
        if (!is_prime(p)) throw UsageError("converge sweeps take prime dimensions only");
        primes.push_back(static_cast<int>(p));
    }
    StateFamily fam;
    if (family == "number") fam.kind = FamilyKind::NumberState;
    else if (family == "phase-delta") fam.kind = FamilyKind::PhaseDelta;
    ConvergenceReport r;
    if (observable == "wigner") r = phase_basis_wigner_limit(primes, fam);
    else r = weak_convergence_sweep(primes, gamma, observable == "E_phi" ? Observable::PhaseExp : Observable::NumberExp, fam);
    emit(out, format == "csv" ? convergence_csv(r) : dump(convergence_to_json(r)));
    return Ok;
}

int cmd_transform(const Common& c, const std::string& r_s, double tol) {
    const Dimension dim = make_dimension(c.d);
    const auto v = parse_list(r_s);
    if (v.size() != 4) throw UsageError("--r takes four integers a,b,c,d");
    const MetaplecticOperator g = build_metaplectic(dim, map_from_rows(v[0], v[1], v[2], v[3]));
    const double fourier = proportionality_residual(g.G.entries, build_fourier_operator(dim).entries);
    if (c.format == "csv") {
        std::ostringstream os;
        os << "m1,m2,image1,image2,phase_re,phase_im,residual\n";
        for (const auto& p : g.per_m)
            os << p.m.m1 << ',' << p.m.m2 << ',' << p.image.m1 << ',' << p.image.m2 << ',' << format_double(p.phase.real()) << ','
               << format_double(p.phase.imag()) << ',' << format_double(p.residual) << '\n';
        emit(c.out, os.str());
    } else {
        json j = transform_to_json(g);
        j["fourier_residual"] = fourier;
        j["G"] = operator_to_json(g.G)["rows"];
        emit(c.out, dump(j));
    }
    const bool ok = g.unitary_residual <= std::max(tol, 1e-12) && g.max_residual <= std::max(tol, 1e-9);
    return ok ? Ok : VerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Finite-dimensional phase-space toolkit: Schwinger operators, deformed algebras, Wigner functions"};
    app.require_subcommand(1);

    Common gen_c;
    std::string gen_kind, gen_m, gen_pair = "clock-shift";
    auto* gen = app.add_subcommand("gen", "write an operator matrix");
    add_common(gen, gen_c, "json");
    gen->add_option("--kind", gen_kind, "operator kind")->required()->check(CLI::IsMember({"u", "v", "fourier", "schwinger", "phase", "number-exp"}));
    gen->add_option("--m", gen_m, "Schwinger label m1,m2");
    gen->add_option("--pair", gen_pair, "conjugate pair")->check(CLI::IsMember({"clock-shift", "number-phase"}));

    int ver_d = 0;
    std::string ver_suite = "all", ver_format = "table";
    SuiteOptions opt;
    opt.tol = default_tol();
    auto* ver = app.add_subcommand("verify", "run an invariant suite");
    ver->add_option("--d", ver_d, "dimension")->required()->check(CLI::Range(1, 100000));
    ver->add_option("--suite", ver_suite, "suite name")->check(CLI::IsMember(suite_names()));
    ver->add_option("--tol", opt.tol, "tolerance (default TORUS_TOL or 1e-10)")->check(CLI::PositiveNumber);
    ver->add_option("--seed", opt.seed, "random seed");
    ver->add_option("--samples", opt.samples, "random samples per check (0: exhaustive where supported)")->check(CLI::Range(0, 100000));
    ver->add_option("--format", ver_format, "output format")->check(CLI::IsMember({"table", "json", "csv"}));

    Common wig_c;
    std::string wig_state, wig_basis = "torus";
    bool wig_decompose = false, wig_half = false;
    auto* wig = app.add_subcommand("wigner", "Wigner function of a state");
    add_common(wig, wig_c, "csv");
    wig->add_option("--state", wig_state, "fock:n | phase:l | u:k | v:l | random:<seed> | file:<path>")->required();
    wig->add_option("--basis", wig_basis, "phase-space representation")->check(CLI::IsMember({"torus", "number-phase"}));
    wig->add_flag("--decompose", wig_decompose, "even/odd split on the half-integer action grid");
    wig->add_flag("--half-integer", wig_half, "half-integer action grid");

    Common spec_c;
    std::string spec_m, spec_mp, spec_pair = "clock-shift";
    auto* spec = app.add_subcommand("spectrum", "q-oscillator spectrum for a pair (m, m')");
    add_common(spec, spec_c, "csv");
    spec->add_option("--m", spec_m, "m1,m2")->required();
    spec->add_option("--mp", spec_mp, "mp1,mp2")->required();
    spec->add_option("--pair", spec_pair, "conjugate pair")->check(CLI::IsMember({"clock-shift", "number-phase"}));

    Common idx_c;
    std::string idx_case = "qosc";
    int idx_sign = 1;
    long long idx_cross = 1;
    auto* idx = app.add_subcommand("index", "Fujikawa index of a spectrum profile");
    add_common(idx, idx_c, "json");
    idx->add_option("--case", idx_case, "profile")->check(CLI::IsMember({"linear", "qosc", "unit-cross", "quarter-cross", "admissible"}));
    idx->add_option("--sign", idx_sign, "branch sign for the limiting profiles")->check(CLI::IsMember({1, -1}));
    idx->add_option("--cross", idx_cross, "m x m' for the qosc profile");

    std::string conv_primes = "11,23,47,101", conv_obs = "E_N", conv_family = "gaussian", conv_format = "csv", conv_out;
    double conv_gamma = 1.0;
    auto* conv = app.add_subcommand("converge", "large-D convergence sweep");
    conv->add_option("--primes", conv_primes, "comma-separated prime dimensions");
    conv->add_option("--observable", conv_obs, "observable")->check(CLI::IsMember({"E_N", "E_phi", "wigner"}));
    conv->add_option("--gamma", conv_gamma, "target angle for E_N");
    conv->add_option("--family", conv_family, "test-state family")->check(CLI::IsMember({"gaussian", "number", "phase-delta"}));
    conv->add_option("--format", conv_format, "output format")->check(CLI::IsMember({"json", "csv"}));
    conv->add_option("--out", conv_out, "output path");

    Common tr_c;
    std::string tr_r;
    double tr_tol = default_tol();
    auto* tr = app.add_subcommand("transform", "build and verify the metaplectic operator of R");
    add_common(tr, tr_c, "json");
    tr->add_option("--r", tr_r, "R row-major a,b,c,d")->required();
    tr->add_option("--tol", tr_tol, "tolerance")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return Usage;
    }

    try {
        if (*gen) return cmd_gen(gen_c, gen_kind, gen_m, gen_pair);
        if (*ver) return cmd_verify(ver_d, ver_suite, opt, ver_format);
        if (*wig) return cmd_wigner(wig_c, wig_state, wig_basis, wig_decompose, wig_half);
        if (*spec) return cmd_spectrum(spec_c, spec_m, spec_mp, spec_pair);
        if (*idx) return cmd_index(idx_c, idx_case, idx_sign, idx_cross);
        if (*conv) return cmd_converge(conv_primes, conv_obs, conv_gamma, conv_family, conv_format, conv_out);
        if (*tr) return cmd_transform(tr_c, tr_r, tr_tol);
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return IoFailure;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return Usage;
    } catch (const Error& e) {
        std::cerr << "error [" << to_string(e.kind()) << "]: " << e.what() << "\n";
        switch (e.kind()) {
            case ErrorKind::PhaseMismatch:
            case ErrorKind::NonscalarPower:
                return VerifyFailed;
            default:
                return Usage;
        }
    }
    return Usage;
}
