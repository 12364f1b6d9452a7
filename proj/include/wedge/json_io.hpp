#pragma once

#include "wedge/states.hpp"

#include <json.hpp>

#include <string>

namespace wedge {

using ojson = nlohmann::ordered_json;

// 17 significant digits; integral values keep a trailing ".0".
std::string format_double(double v);

// Compact JSON with format_double for every floating-point value.
std::string dump_json(const ojson& j);

ojson state_to_json(const Eigenstate& s);
// Accepts {system, family, quantum_numbers{...}, n_phi, phi0, f?} or the same
// quantum numbers as flat keys; {mu} alone gives an abstract mode.
Eigenstate state_from_json(const nlohmann::json& j);
Eigenstate parse_state(const std::string& text);

ojson point_to_json(const CoordinatePoint& p);
// "rho=1,phi=1,z=0"; the key set selects the chart.
CoordinatePoint parse_point(const std::string& text);

Family parse_family(const std::string& system, const std::string& family);

}  // namespace wedge
