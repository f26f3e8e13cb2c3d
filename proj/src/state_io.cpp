#include "negbounds/state_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace negbounds::io {

using nlohmann::json;
using states::PureState;

PureState parse_state(const std::string& text, bool renormalize) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw BadStateFile(std::string("state file is not valid JSON: ") + e.what());
    }
    if (!doc.contains("dim_a") || !doc.contains("dim_b") || !doc.contains("amplitudes"))
        throw BadStateFile("state file needs dim_a, dim_b and amplitudes fields");
    if (!doc["dim_a"].is_number_unsigned() || !doc["dim_b"].is_number_unsigned())
        throw BadStateFile("dim_a and dim_b must be nonnegative integers");
    const auto m = doc["dim_a"].get<std::size_t>();
    const auto n = doc["dim_b"].get<std::size_t>();
    const auto& amps = doc["amplitudes"];
    if (!amps.is_array() || amps.size() != m * n)
        throw BadStateFile("amplitudes must hold dim_a*dim_b [re, im] pairs");

    std::vector<linalg::cplx> v;
    v.reserve(m * n);
    double norm_sq = 0.0;
    for (const auto& pair : amps) {
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number())
            throw BadStateFile("each amplitude must be a [re, im] pair");
        const linalg::cplx a{pair[0].get<double>(), pair[1].get<double>()};
        norm_sq += std::norm(a);
        v.push_back(a);
    }
    if (!renormalize && std::abs(std::sqrt(norm_sq) - 1.0) > 1e-6)
        throw BadStateFile("state vector norm deviates from 1 by more than 1e-6; "
                           "pass --renormalize to accept it");
    return PureState(m, n, std::move(v));
}

PureState load_state(const std::string& path, bool renormalize) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open state file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_state(buf.str(), renormalize);
}

std::string serialize_state(const states::PureState& s) {
    json doc;
    doc["dim_a"] = s.dim_a();
    doc["dim_b"] = s.dim_b();
    json amps = json::array();
    for (const auto& a : s.amplitudes()) amps.push_back(json::array({a.real(), a.imag()}));
    doc["amplitudes"] = std::move(amps);
    return doc.dump(2) + "\n";
}

void save_state(const states::PureState& s, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open output file: " + path);
    out << serialize_state(s);
}

}  // namespace negbounds::io
