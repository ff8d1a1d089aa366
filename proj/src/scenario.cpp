#include "flexvar/scenario.hpp"

#include <fstream>
#include <sstream>

namespace flexvar {

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

bool parse_bool(const std::string& value, const std::string& key) {
    if (value == "true" || value == "1" || value == "yes" || value == "on") return true;
    if (value == "false" || value == "0" || value == "no" || value == "off") return false;
    throw ValidationError("field '" + key + "': expected a boolean, got '" + value + "'");
}

int parse_int(const std::string& value, const std::string& key) {
    try {
        std::size_t pos = 0;
        const int x = std::stoi(value, &pos);
        if (pos != value.size()) throw std::invalid_argument(value);
        return x;
    } catch (const std::exception&) {
        throw ValidationError("field '" + key + "': expected an integer, got '" + value + "'");
    }
}

double parse_num(const std::string& value, const std::string& key) {
    try {
        std::size_t pos = 0;
        const double x = std::stod(value, &pos);
        if (pos != value.size()) throw std::invalid_argument(value);
        return x;
    } catch (const std::exception&) {
        throw ValidationError("field '" + key + "': expected a number, got '" + value + "'");
    }
}

void set_field(Scenario& s, const std::string& key, const std::string& value) {
    if (key == "surface") s.surface = value;
    else if (key == "domain") s.domain = value;
    else if (key == "flex") s.flex = value;
    else if (key == "nodes") s.nodes = parse_int(value, key);
    else if (key == "boundary_nodes") s.boundary_nodes = parse_int(value, key);
    else if (key == "fd_step") s.fd_step = parse_num(value, key);
    else if (key == "richardson") s.richardson = parse_bool(value, key);
    else if (key == "samples") s.samples = parse_int(value, key);
    else if (key == "t_list") s.t_list = parse_t_list(value);
    else if (key == "format") s.format = value;
    else if (key == "erratum_probe") s.erratum_probe = parse_bool(value, key);
    else if (key == "out") s.out = value;
    else if (key == "grid") s.grid = value;
    else throw ValidationError("unknown scenario field '" + key + "'");
}

}  // namespace

std::vector<double> parse_t_list(const std::string& csv) {
    std::vector<double> ts;
    std::string cur;
    std::istringstream in(csv);
    while (std::getline(in, cur, ',')) {
        const std::string item = trim(cur);
        if (item.empty()) continue;
        ts.push_back(parse_num(item, "t_list"));
    }
    return ts;
}

Scenario parse_scenario_text(const std::string& text) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{')
        return scenario_from_json(nlohmann::json::parse(text));
    Scenario s;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ValidationError("scenario line " + std::to_string(lineno) + ": expected key = value");
        set_field(s, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
    return s;
}

Scenario parse_scenario_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open scenario file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_scenario_text(buf.str());
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError("scenario file '" + path + "': " + e.what());
    }
}

void apply_overrides(Scenario& s, const ScenarioOverrides& o) {
    if (o.surface) s.surface = *o.surface;
    if (o.domain) s.domain = *o.domain;
    if (o.flex) s.flex = *o.flex;
    if (o.nodes) s.nodes = *o.nodes;
    if (o.boundary_nodes) s.boundary_nodes = *o.boundary_nodes;
    if (o.fd_step) s.fd_step = *o.fd_step;
    if (o.richardson) s.richardson = *o.richardson;
    if (o.samples) s.samples = *o.samples;
    if (o.t_list) s.t_list = parse_t_list(*o.t_list);
    if (o.format) s.format = *o.format;
    if (o.erratum_probe) s.erratum_probe = *o.erratum_probe;
    if (o.out) s.out = *o.out;
    if (o.grid) s.grid = *o.grid;
}

nlohmann::json scenario_to_json(const Scenario& s) {
    nlohmann::json j;
    j["surface"] = s.surface;
    j["domain"] = s.domain;
    j["flex"] = s.flex;
    j["nodes"] = s.nodes;
    j["boundary_nodes"] = s.boundary_nodes;
    j["fd_step"] = s.fd_step;
    j["richardson"] = s.richardson;
    j["samples"] = s.samples;
    j["t_list"] = s.t_list;
    j["format"] = s.format;
    j["erratum_probe"] = s.erratum_probe;
    j["out"] = s.out;
    j["grid"] = s.grid;
    return j;
}

Scenario scenario_from_json(const nlohmann::json& j) {
    Scenario s;
    if (!j.is_object()) throw ValidationError("scenario JSON must be an object");
    for (const auto& [key, value] : j.items()) {
        if (key == "t_list") {
            if (!value.is_array()) throw ValidationError("field 't_list': expected an array");
            s.t_list = value.get<std::vector<double>>();
        } else if (value.is_string()) {
            set_field(s, key, value.get<std::string>());
        } else if (value.is_boolean()) {
            set_field(s, key, value.get<bool>() ? "true" : "false");
        } else if (value.is_number()) {
            std::ostringstream num;
            num.precision(17);
            num << value.get<double>();
            set_field(s, key, num.str());
        } else {
            throw ValidationError("field '" + key + "': unsupported JSON value");
        }
    }
    return s;
}

std::string scenario_to_text(const Scenario& s) {
    std::ostringstream out;
    out.precision(17);
    out << "surface = " << s.surface << "\n";
    if (!s.domain.empty()) out << "domain = " << s.domain << "\n";
    if (!s.flex.empty()) out << "flex = " << s.flex << "\n";
    out << "nodes = " << s.nodes << "\n";
    out << "boundary_nodes = " << s.boundary_nodes << "\n";
    out << "fd_step = " << s.fd_step << "\n";
    out << "richardson = " << (s.richardson ? "true" : "false") << "\n";
    out << "samples = " << s.samples << "\n";
    if (!s.t_list.empty()) {
        out << "t_list = ";
        for (std::size_t i = 0; i < s.t_list.size(); ++i) out << (i ? "," : "") << s.t_list[i];
        out << "\n";
    }
    out << "format = " << s.format << "\n";
    out << "erratum_probe = " << (s.erratum_probe ? "true" : "false") << "\n";
    if (!s.out.empty()) out << "out = " << s.out << "\n";
    out << "grid = " << s.grid << "\n";
    return out.str();
}

ResolvedScenario resolve(const Scenario& s) {
    MongePatch patch = catalog_surface(s.surface);
    if (!s.domain.empty()) {
        if (s.domain.rfind("rect:", 0) == 0) {
            const auto ts = parse_t_list(s.domain.substr(5));
            if (ts.size() != 4)
                throw ValidationError("field 'domain': rect:u0,u1,v0,v1 needs four numbers");
            patch.domain = Domain2::rectangle(ts[0], ts[1], ts[2], ts[3]);
        } else if (s.domain.rfind("disk:", 0) == 0) {
            const auto ts = parse_t_list(s.domain.substr(5));
            if (ts.size() != 3)
                throw ValidationError("field 'domain': disk:cu,cv,r needs three numbers");
            patch.domain = Domain2::disk(ts[0], ts[1], ts[2]);
        } else {
            throw ValidationError("field 'domain': expected rect:u0,u1,v0,v1 or disk:cu,cv,r");
        }
    }

    ResolvedScenario r{patch, std::nullopt, std::nullopt, {}, s.samples, s.t_list};
    if (s.nodes < 2) throw ValidationError("field 'nodes': need at least 2 nodes per axis");
    if (s.boundary_nodes < 1) throw ValidationError("field 'boundary_nodes': need at least 1 node");
    if (!(s.fd_step > 0)) throw ValidationError("field 'fd_step': must be positive");
    if (s.samples < 2) throw ValidationError("field 'samples': need at least 2 per axis");
    if (s.format != "text" && s.format != "json" && s.format != "csv")
        throw ValidationError("field 'format': expected text, json or csv");
    r.variation.quad.nodes_per_axis = s.nodes;
    r.variation.boundary.nodes = s.boundary_nodes;
    r.variation.fd_step = s.fd_step;
    r.variation.richardson = s.richardson;
    r.variation.erratum_probe = s.erratum_probe;

    if (!s.flex.empty()) {
        r.flex = catalog_flex(s.flex, patch);
        if (!r.flex) {
            // construct / construct:NUxNV; the grid may also come from s.grid.
            std::string g = s.grid;
            const auto colon = s.flex.find(':');
            if (colon != std::string::npos) g = s.flex.substr(colon + 1);
            const auto x = g.find('x');
            if (x == std::string::npos)
                throw ValidationError("field 'grid': expected NUxNV, e.g. 12x12");
            r.construct_grid = {parse_int(g.substr(0, x), "grid"), parse_int(g.substr(x + 1), "grid")};
        }
    }
    return r;
}

}  // namespace flexvar
