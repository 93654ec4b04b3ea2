#pragma once

// JSON ingestion for the command-line tool: constants overrides, tolerance
// overrides and geodesic seeds. Unknown keys are rejected.
// Needs nlohmann/json (json.hpp) on the include path.

#include <fstream>
#include <initializer_list>
#include <numbers>
#include <sstream>
#include <string>
#include <string_view>

#include <json.hpp>

#include "lorentzkit/bohr_atom.hpp"
#include "lorentzkit/error.hpp"
#include "lorentzkit/geodesics.hpp"
#include "lorentzkit/metric_models.hpp"
#include "lorentzkit/validation.hpp"

namespace lorentzkit::io {

using Json = nlohmann::ordered_json;

inline std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorKind::Io, "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) fail(ErrorKind::Io, "cannot read '" + path + "'");
    return ss.str();
}

inline Json parse_json_text(std::string_view text, std::string_view what) {
    try {
        return Json::parse(text.begin(), text.end());
    } catch (const Json::parse_error& e) {
        fail(ErrorKind::Input, std::string(what) + ": " + e.what());
    }
}

/// Accepts either inline JSON (leading '{') or a path to a JSON file.
inline Json load_json_argument(const std::string& arg, std::string_view what) {
    const auto first = arg.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && arg[first] == '{') return parse_json_text(arg, what);
    return parse_json_text(read_text_file(arg), what);
}

inline void require_object(const Json& j, std::string_view what) {
    if (!j.is_object()) fail(ErrorKind::Input, std::string(what) + " must be a JSON object");
}

inline void reject_unknown_keys(const Json& j, std::initializer_list<std::string_view> allowed,
                                std::string_view what) {
    for (const auto& [key, _] : j.items()) {
        bool ok = false;
        for (auto a : allowed) ok = ok || key == a;
        if (!ok) fail(ErrorKind::Input, std::string(what) + ": unknown key '" + key + "'");
    }
}

inline double number_field(const Json& j, const std::string& key, std::string_view what) {
    const Json& v = j.at(key);
    if (!v.is_number()) fail(ErrorKind::Input, std::string(what) + ": '" + key + "' must be a number");
    const double d = v.get<double>();
    if (!std::isfinite(d)) fail(ErrorKind::Input, std::string(what) + ": '" + key + "' must be finite");
    return d;
}

inline bohr::PhysicalConstants constants_from_json(const Json& j) {
    require_object(j, "constants");
    reject_unknown_keys(j, {"h", "e", "eps0", "c", "m_e"}, "constants");
    bohr::PhysicalConstants k = bohr::PhysicalConstants::codata2018();
    if (j.contains("h")) k.h = number_field(j, "h", "constants");
    if (j.contains("e")) k.e = number_field(j, "e", "constants");
    if (j.contains("eps0")) k.eps0 = number_field(j, "eps0", "constants");
    if (j.contains("c")) k.c = number_field(j, "c", "constants");
    if (j.contains("m_e")) k.m_e = number_field(j, "m_e", "constants");
    k.validate();
    return k;
}

inline void apply_tolerances(validation::Tolerances& tol, const Json& j) {
    require_object(j, "tolerance");
    for (const auto& [key, v] : j.items()) {
        if (!v.is_number()) fail(ErrorKind::Input, "tolerance: '" + key + "' must be a number");
        tol.set(key, v.get<double>());
    }
}

/// Seed keys: t, r, phi, theta, dt, dr, dphi, dtheta. r is required; phi defaults to
/// pi/2, dt to the effective-parameter value 1/f(r), everything else to 0.
inline GeodesicState seed_from_json(const Json& j, MetricModel m) {
    require_object(j, "seed");
    reject_unknown_keys(j, {"eta", "t", "r", "phi", "theta", "dt", "dr", "dphi", "dtheta"}, "seed");
    if (!j.contains("r")) fail(ErrorKind::Input, "seed: 'r' is required");
    GeodesicState s;
    s.phi = std::numbers::pi / 2.0;
    auto opt = [&](const char* key, double& dst) {
        if (j.contains(key)) dst = number_field(j, key, "seed");
    };
    opt("eta", s.eta);
    opt("t", s.t);
    opt("r", s.r);
    opt("phi", s.phi);
    opt("theta", s.theta);
    opt("dr", s.dr);
    opt("dphi", s.dphi);
    opt("dtheta", s.dtheta);
    m.require_domain(s.r);
    s.dt = 1.0 / m.lapse(s.r);
    opt("dt", s.dt);
    return s;
}

} // namespace lorentzkit::io
