#pragma once
// JSON and CSV serialisation, state specifiers.

#include "torus/canonical.hpp"
#include "torus/limits.hpp"

#include "json.hpp"

#include <stdexcept>
#include <string>

namespace torus {

using json = nlohmann::json;

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// %.16e: 17 significant digits, lowercase scientific
std::string format_double(double x);

json complex_to_json(cplx z);
cplx complex_from_json(const json& j);

json operator_to_json(const OperatorMatrix& op);
OperatorMatrix operator_from_json(const json& j);
json state_to_json(const StateVector& s);
StateVector state_from_json(const json& j);
json eigensystem_to_json(const SchwingerEigensystem& es);
json transform_to_json(const MetaplecticOperator& g);
json index_to_json(const SpectrumProfile& p);

std::string operator_csv(const OperatorMatrix& op);
std::string wigner_csv(const WignerGrid& g);  // V1,V2,W or J,theta,W
std::string even_odd_csv(const EvenOddDecomposition& e);
std::string spectrum_csv(const QOscillator& osc);
std::string convergence_csv(const ConvergenceReport& r);
json wigner_to_json(const WignerGrid& g);
json spectrum_to_json(const QOscillator& osc);
json convergence_to_json(const ConvergenceReport& r);

std::string read_text(const std::string& path);
void write_text(const std::string& path, const std::string& text);

// fock:n | number:n | phase:l | u:k | v:l | random:<seed> | file:<path>.
// Throws InvalidArgument on a malformed specifier and IoError on an unreadable file.
StateVector parse_state_spec(const Dimension& dim, const std::string& spec);

}  // namespace torus
