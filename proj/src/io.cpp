#include "torus/io.hpp"

#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>

namespace torus {

std::string format_double(double x) {
    if (x == 0.0) x = 0.0;  // drop negative zero
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.16e", x);
    return buf;
}

json complex_to_json(cplx z) { return json::array({z.real(), z.imag()}); }

cplx complex_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2) throw Error(ErrorKind::InvalidArgument, "complex entry must be [re, im]");
    return {j.at(0).get<double>(), j.at(1).get<double>()};
}

json operator_to_json(const OperatorMatrix& op) {
    json rows = json::array();
    for (int i = 0; i < op.entries.rows(); ++i) {
        json row = json::array();
        for (int k = 0; k < op.entries.cols(); ++k) row.push_back(complex_to_json(op.entries(i, k)));
        rows.push_back(row);
    }
    return {{"dim", op.dim.value()}, {"provenance", op.provenance}, {"rows", rows}};
}

OperatorMatrix operator_from_json(const json& j) {
    const Dimension dim(j.at("dim").get<int>());
    const int d = dim.value();
    const json& rows = j.at("rows");
    if (static_cast<int>(rows.size()) != d) throw Error(ErrorKind::InvalidArgument, "row count differs from dim");
    Matrix m(d, d);
    for (int i = 0; i < d; ++i) {
        if (static_cast<int>(rows[i].size()) != d) throw Error(ErrorKind::InvalidArgument, "column count differs from dim");
        for (int k = 0; k < d; ++k) m(i, k) = complex_from_json(rows[i][k]);
    }
    return {dim, m, j.value("provenance", std::string("file"))};
}

json state_to_json(const StateVector& s) {
    json amps = json::array();
    for (int i = 0; i < s.amplitudes.size(); ++i) amps.push_back(complex_to_json(s.amplitudes(i)));
    json out = {{"dim", s.dim.value()}, {"basis", to_string(s.basis)}, {"amplitudes", amps}};
    if (s.basis == Basis::ShiftedFock) out["alpha"] = s.alpha;
    return out;
}

StateVector state_from_json(const json& j) {
    const Dimension dim(j.at("dim").get<int>());
    const json& a = j.at("amplitudes");
    if (static_cast<int>(a.size()) != dim.value()) throw Error(ErrorKind::InvalidArgument, "amplitude count differs from dim");
    Vector v(dim.value());
    for (int i = 0; i < dim.value(); ++i) v(i) = complex_from_json(a[i]);
    const std::string b = j.value("basis", std::string("u"));
    Basis basis = Basis::U;
    bool known = false;
    for (Basis c : {Basis::U, Basis::V, Basis::Number, Basis::Phase, Basis::ShiftedFock})
        if (b == to_string(c)) {
            basis = c;
            known = true;
        }
    if (!known) throw Error(ErrorKind::UnsupportedBasis, "unknown basis: " + b);
    return {dim, v, basis, j.value("alpha", 0.0)};
}

json eigensystem_to_json(const SchwingerEigensystem& es) {
    json vals = json::array(), vecs = json::array();
    for (size_t i = 0; i < es.eigenvalues.size(); ++i) {
        vals.push_back(complex_to_json(es.eigenvalues[i]));
        vecs.push_back(state_to_json({es.dim, es.eigenvectors[i], Basis::U, 0.0}));
    }
    return {{"m", {es.m.m1, es.m.m2}}, {"r", es.r_index}, {"eigenvalues", vals}, {"eigenvectors", vecs}};
}

json transform_to_json(const MetaplecticOperator& g) {
    json per = json::array();
    for (const auto& p : g.per_m)
        per.push_back({{"m", {p.m.m1, p.m.m2}}, {"image", {p.image.m1, p.image.m2}}, {"phase", complex_to_json(p.phase)}, {"residual", p.residual}});
    return {{"D", g.dim.value()},
            {"R", {{g.map.s1, g.map.t1}, {g.map.s2, g.map.t2}}},
            {"unitary_residual", g.unitary_residual},
            {"max_residual", g.max_residual},
            {"chi_flat", g.chi_flat},
            {"per_m", per}};
}

json index_to_json(const SpectrumProfile& p) {
    return {{"D", p.D}, {"case", to_string(p.tag)}, {"sign", p.sign}, {"cross", p.cross},
            {"I", p.index}, {"f0", p.formula(0)}, {"fD", p.formula(p.D)}};
}

std::string operator_csv(const OperatorMatrix& op) {
    std::ostringstream os;
    os << "row,col,re,im\n";
    for (int i = 0; i < op.entries.rows(); ++i)
        for (int k = 0; k < op.entries.cols(); ++k)
            os << i << ',' << k << ',' << format_double(op.entries(i, k).real()) << ',' << format_double(op.entries(i, k).imag()) << '\n';
    return os.str();
}

namespace {

bool torus_grid(const WignerGrid& g) { return g.norm == Normalisation::Torus; }

std::string coord(double x, bool integral) {
    if (integral) return std::to_string(static_cast<long long>(std::llround(x)));
    return format_double(x);
}

bool all_integral(const std::vector<double>& v) {
    for (double x : v)
        if (x != std::round(x)) return false;
    return true;
}

}  // namespace

std::string wigner_csv(const WignerGrid& g) {
    std::ostringstream os;
    os << (torus_grid(g) ? "V1,V2,W\n" : "J,theta,W\n");
    const bool ri = all_integral(g.rows);
    for (int i = 0; i < g.values.rows(); ++i)
        for (int k = 0; k < g.values.cols(); ++k)
            os << coord(g.rows[i], ri) << ',' << coord(g.cols[k], torus_grid(g)) << ',' << format_double(g.values(i, k)) << '\n';
    return os.str();
}

std::string even_odd_csv(const EvenOddDecomposition& e) {
    std::ostringstream os;
    os << "J,theta,W_even,W_odd,W\n";
    for (int i = 0; i < e.full.values.rows(); ++i)
        for (int k = 0; k < e.full.values.cols(); ++k)
            os << format_double(e.full.rows[i]) << ',' << format_double(e.full.cols[k]) << ',' << format_double(e.even.values(i, k)) << ','
               << format_double(e.odd.values(i, k)) << ',' << format_double(e.full.values(i, k)) << '\n';
    return os.str();
}

json wigner_to_json(const WignerGrid& g) {
    json vals = json::array();
    for (int i = 0; i < g.values.rows(); ++i) {
        json row = json::array();
        for (int k = 0; k < g.values.cols(); ++k) row.push_back(g.values(i, k));
        vals.push_back(row);
    }
    return {{"dim", g.dim.value()},
            {"normalisation", torus_grid(g) ? "torus" : "action-angle"},
            {"state", g.state_ref},
            {"rows", g.rows},
            {"cols", g.cols},
            {"values", vals}};
}

std::string spectrum_csv(const QOscillator& osc) {
    std::ostringstream os;
    os << "n,f_n,C,q_re,q_im,m1,m2,mp1,mp2\n";
    for (size_t n = 0; n < osc.spectrum.size(); ++n)
        os << n << ',' << format_double(osc.spectrum[n]) << ',' << format_double(osc.C) << ',' << format_double(osc.q.real()) << ','
           << format_double(osc.q.imag()) << ',' << osc.m.m1 << ',' << osc.m.m2 << ',' << osc.mp.m1 << ',' << osc.mp.m2 << '\n';
    return os.str();
}

json spectrum_to_json(const QOscillator& osc) {
    return {{"D", osc.dim.value()}, {"m", {osc.m.m1, osc.m.m2}}, {"mp", {osc.mp.m1, osc.mp.m2}}, {"cross", osc.cross},
            {"C", osc.C}, {"q", complex_to_json(osc.q)}, {"f", osc.spectrum}};
}

std::string convergence_csv(const ConvergenceReport& r) {
    std::ostringstream os;
    os << "D,residual\n";
    for (size_t i = 0; i < r.primes.size(); ++i) os << r.primes[i] << ',' << format_double(r.residuals[i]) << '\n';
    return os.str();
}

json convergence_to_json(const ConvergenceReport& r) {
    return {{"observable", r.observable}, {"gamma", r.gamma}, {"D", r.primes}, {"residual", r.residuals},
            {"monotone_decreasing", r.monotone_decreasing}};
}

std::string read_text(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    if (in.bad()) throw IoError("read failed: " + path);
    return os.str();
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + path + " for writing");
    out << text;
    out.flush();
    if (!out) throw IoError("write failed: " + path);
}

StateVector parse_state_spec(const Dimension& dim, const std::string& spec) {
    const auto colon = spec.find(':');
    if (colon == std::string::npos || colon + 1 >= spec.size()) throw Error(ErrorKind::InvalidArgument, "state spec must be kind:value");
    const std::string kind = spec.substr(0, colon);
    const std::string arg = spec.substr(colon + 1);
    if (kind == "file") {
        json j;
        try {
            j = json::parse(read_text(arg));
        } catch (const json::exception& e) {
            throw Error(ErrorKind::InvalidArgument, std::string("state file is not valid JSON: ") + e.what());
        }
        StateVector s = state_from_json(j);
        if (!(s.dim == dim)) throw Error(ErrorKind::InvalidArgument, "state file dimension differs from --d");
        s = change_basis(s, Basis::U);
        s.amplitudes.normalize();
        return s;
    }
    std::size_t used = 0;
    long long v = 0;
    try {
        v = std::stoll(arg, &used);
    } catch (const std::exception&) {
        throw Error(ErrorKind::InvalidArgument, "state index is not an integer: " + arg);
    }
    if (used != arg.size()) throw Error(ErrorKind::InvalidArgument, "state index is not an integer: " + arg);
    if (kind == "random") {
        std::mt19937_64 rng(static_cast<std::uint64_t>(v));
        return random_state(dim, rng);
    }
    const int idx = static_cast<int>(mod(v, dim.value()));
    if (kind == "fock" || kind == "number") return basis_state(dim, Basis::Number, idx);
    if (kind == "phase") return basis_state(dim, Basis::Phase, idx);
    if (kind == "u") return basis_state(dim, Basis::U, idx);
    if (kind == "v") return basis_state(dim, Basis::V, idx);
    throw Error(ErrorKind::InvalidArgument, "unknown state kind: " + kind);
}

}  // namespace torus
