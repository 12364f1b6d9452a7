#include "wedge/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>

namespace wedge {

std::string format_double(double v)
{
    if (!std::isfinite(v)) return "null";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    std::string s(buf);
    if (s.find_first_of(".eE") == std::string::npos) s += ".0";
    return s;
}

namespace {

void emit(const ojson& j, std::string& out)
{
    switch (j.type()) {
    case ojson::value_t::object: {
        out += '{';
        bool first = true;
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (!first) out += ',';
            first = false;
            out += ojson(it.key()).dump();
            out += ':';
            emit(it.value(), out);
        }
        out += '}';
        break;
    }
    case ojson::value_t::array: {
        out += '[';
        bool first = true;
        for (const auto& v : j) {
            if (!first) out += ',';
            first = false;
            emit(v, out);
        }
        out += ']';
        break;
    }
    case ojson::value_t::number_float: out += format_double(j.get<double>()); break;
    default: out += j.dump(); break;
    }
}

const char* q1_name(Family f)
{
    switch (f) {
    case Family::osc_cyl: return "n_rho";
    case Family::osc_sph:
    case Family::hyd_sph: return "n_r";
    case Family::hyd_par: return "n_xi";
    case Family::hyd_spheroidal: return "n_u";
    }
    return "?";
}

const char* q2_name(Family f)
{
    switch (f) {
    case Family::osc_cyl: return "n_z";
    case Family::osc_sph:
    case Family::hyd_sph: return "n_theta";
    case Family::hyd_par: return "n_eta";
    case Family::hyd_spheroidal: return "n_v";
    }
    return "?";
}

int get_quantum(const nlohmann::json& j, const char* key)
{
    const nlohmann::json* src = &j;
    if (j.contains("quantum_numbers")) src = &j.at("quantum_numbers");
    if (!src->contains(key)) throw DomainError(std::string("state is missing ") + key);
    const auto& v = src->at(key);
    if (!v.is_number_integer()) throw DomainError(std::string(key) + " must be an integer");
    return v.get<int>();
}

}  // namespace

std::string dump_json(const ojson& j)
{
    std::string out;
    emit(j, out);
    return out;
}

Family parse_family(const std::string& system, const std::string& family)
{
    if (system == "osc" || system == "oscillator") {
        if (family == "cyl" || family == "cylindrical") return Family::osc_cyl;
        if (family == "sph" || family == "spherical") return Family::osc_sph;
    } else if (system == "hydrogen" || system == "hyd") {
        if (family == "sph" || family == "spherical") return Family::hyd_sph;
        if (family == "par" || family == "parabolic") return Family::hyd_par;
        if (family == "spheroidal" || family == "prolate") return Family::hyd_spheroidal;
    } else {
        throw DomainError("unknown system: " + system);
    }
    throw DomainError("unknown family '" + family + "' for system " + system);
}

ojson state_to_json(const Eigenstate& s)
{
    const Family fam = family_of(s);
    const AngularMode& m = mode_of(s);
    auto [a, b] = quantum_numbers(s);
    ojson j;
    j["system"] = system_name(fam);
    j["family"] = family_name(fam);
    j["quantum_numbers"] = ojson::object();
    j["quantum_numbers"][q1_name(fam)] = a;
    j["quantum_numbers"][q2_name(fam)] = b;
    j["n_phi"] = m.n_phi();
    if (m.is_abstract()) {
        j["mu"] = m.mu();
        j["abstract"] = true;
    } else {
        j["phi0"] = m.phi0();
        j["mu"] = m.mu();
    }
    if (auto f = focal_of(s)) j["f"] = *f;
    return j;
}

Eigenstate state_from_json(const nlohmann::json& j)
{
    if (!j.is_object()) throw DomainError("state must be a JSON object");
    for (const char* k : {"system", "family"})
        if (!j.contains(k) || !j.at(k).is_string()) throw DomainError(std::string("state needs a string '") + k + "'");
    const Family fam = parse_family(j.at("system").get<std::string>(), j.at("family").get<std::string>());
    const int n_phi = j.contains("n_phi") ? j.at("n_phi").get<int>() : 1;

    std::optional<AngularMode> mode;
    const bool abstract = j.value("abstract", false) || !j.contains("phi0");
    if (!abstract) {
        mode = AngularMode::from_angle(n_phi, j.at("phi0").get<double>());
    } else {
        if (!j.contains("mu")) throw DomainError("state needs phi0 (with n_phi) or mu");
        if (n_phi < 1) throw DomainError("n_phi must be at least 1");
        mode = AngularMode::abstract(j.at("mu").get<double>() / n_phi).shifted(n_phi - 1);
    }
    std::optional<double> f;
    if (j.contains("f")) f = j.at("f").get<double>();
    return make_state(fam, get_quantum(j, q1_name(fam)), get_quantum(j, q2_name(fam)), *mode, f);
}

Eigenstate parse_state(const std::string& text)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw DomainError(std::string("state is not valid JSON: ") + e.what());
    }
    try {
        return state_from_json(j);
    } catch (const nlohmann::json::exception& e) {
        throw DomainError(std::string("malformed state: ") + e.what());
    }
}

ojson point_to_json(const CoordinatePoint& p)
{
    ojson j;
    j["chart"] = chart_name(p);
    std::visit(
        [&](const auto& c) {
            using T = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<T, Cartesian>) {
                j["x"] = c.x, j["y"] = c.y, j["z"] = c.z;
            } else if constexpr (std::is_same_v<T, Cylindrical>) {
                j["rho"] = c.rho, j["phi"] = c.phi, j["z"] = c.z;
            } else if constexpr (std::is_same_v<T, Spherical>) {
                j["r"] = c.r, j["theta"] = c.theta, j["phi"] = c.phi;
            } else if constexpr (std::is_same_v<T, Parabolic>) {
                j["xi"] = c.xi, j["eta"] = c.eta, j["phi"] = c.phi;
            } else {
                j["u"] = c.u, j["v"] = c.v, j["phi"] = c.phi, j["f"] = c.f;
            }
        },
        p);
    return j;
}

CoordinatePoint parse_point(const std::string& text)
{
    std::map<std::string, double> kv;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw DomainError("point component '" + item + "' is not key=value");
        const std::string key = item.substr(0, eq);
        std::size_t used = 0;
        double v;
        try {
            v = std::stod(item.substr(eq + 1), &used);
        } catch (const std::exception&) {
            throw DomainError("point component '" + item + "' has no numeric value");
        }
        if (used != item.size() - eq - 1 || !std::isfinite(v)) throw DomainError("bad number in '" + item + "'");
        if (!kv.emplace(key, v).second) throw DomainError("duplicate point key " + key);
    }
    std::set<std::string> keys;
    for (const auto& [k, v] : kv) keys.insert(k);
    auto is = [&](std::set<std::string> want) { return keys == want; };
    if (is({"x", "y", "z"})) return Cartesian{kv["x"], kv["y"], kv["z"]};
    if (is({"rho", "phi", "z"})) return Cylindrical{kv["rho"], kv["phi"], kv["z"]};
    if (is({"r", "theta", "phi"})) return Spherical{kv["r"], kv["theta"], kv["phi"]};
    if (is({"xi", "eta", "phi"})) return Parabolic{kv["xi"], kv["eta"], kv["phi"]};
    if (is({"u", "v", "phi", "f"})) return ProlateSpheroidal{kv["u"], kv["v"], kv["phi"], kv["f"]};
    throw DomainError("point keys do not name a chart: " + text);
}

}  // namespace wedge
