#include "flexvar/catalog.hpp"

#include <cmath>
#include <sstream>
#include <vector>

namespace flexvar {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    return parts;
}

double parse_double(const std::string& s, const char* what) {
    try {
        std::size_t pos = 0;
        const double x = std::stod(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return x;
    } catch (const std::exception&) {
        throw ValidationError(std::string("expected a number for ") + what + ", got '" + s + "'");
    }
}

Vec3 parse_vec3(const std::string& s, const char* what) {
    const auto parts = split(s, ',');
    if (parts.size() != 3) throw ValidationError(std::string(what) + " needs three comma-separated numbers");
    return {parse_double(parts[0], what), parse_double(parts[1], what), parse_double(parts[2], what)};
}

}  // namespace

bool is_catalog_surface_name(const std::string& spec) {
    return spec == "plane" || spec == "paraboloid" || spec == "saddle" || spec == "cap" ||
           spec.rfind("cap-", 0) == 0;
}

MongePatch catalog_surface(const std::string& spec) {
    if (spec == "plane") return {expr_field("0"), Domain2::rectangle(0, 1, 0, 1)};
    if (spec == "paraboloid") return {expr_field("(u^2+v^2)/2"), Domain2::rectangle(-1, 1, -1, 1)};
    if (spec == "saddle") return {expr_field("u*v"), Domain2::rectangle(-1, 1, -1, 1)};
    if (spec == "cap" || spec.rfind("cap-", 0) == 0) {
        double R = 1.0, r = 0.5;
        if (spec != "cap") {
            const auto parts = split(spec, '-');
            if (parts.size() != 3) throw ValidationError("cap surface spec is cap-R-r, e.g. cap-1-0.5");
            R = parse_double(parts[1], "cap sphere radius R");
            r = parse_double(parts[2], "cap disk radius r");
        }
        if (!(R > 0) || !(r > 0) || !(r < R))
            throw ValidationError("cap surface needs 0 < r < R");
        std::ostringstream f;
        f.precision(17);
        f << R << "-sqrt(" << R * R << "-u^2-v^2)";
        return {expr_field(f.str()), Domain2::disk(0, 0, r)};
    }
    // Free-form expression over the default unit square.
    return {expr_field(spec), Domain2::rectangle(0, 1, 0, 1)};
}

Field bump_field(double cu, double cv, double r0, double amplitude) {
    if (!(r0 > 0)) throw ValidationError("bump radius must be positive");
    return fn_field([=](double u, double v) {
        const Jet2 du = Jet2::var_u(u) - cu;
        const Jet2 dv = Jet2::var_v(v) - cv;
        const Jet2 rho2 = (du * du + dv * dv) / (r0 * r0);
        if (rho2.v >= 1.0 - 1e-12) return Jet2::constant(0.0);
        // exp(1 - 1/(1-rho^2)): value 'amplitude' at the center, all
        // derivatives -> 0 toward rho = 1.
        const Jet2 t = 1.0 - rho2;
        return amplitude * jet_exp(1.0 - jet_inv(t));
    });
}

std::optional<FlexField> catalog_flex(const std::string& spec, const MongePatch& patch) {
    if (spec.rfind("construct", 0) == 0) return std::nullopt;
    if (spec == "rigid-translation") return rigid_motion_flex({0.3, -0.2, 0.5}, {0, 0, 0}, patch);
    if (spec == "rigid-rotation") return rigid_motion_flex({0, 0, 0}, {0.4, 0.25, -0.3}, patch);
    if (spec.rfind("rigid:", 0) == 0) {
        const auto parts = split(spec.substr(6), ';');
        if (parts.size() != 2)
            throw ValidationError("rigid flex spec is rigid:ax,ay,az;bx,by,bz");
        return rigid_motion_flex(parse_vec3(parts[0], "translation rate"),
                                 parse_vec3(parts[1], "rotation rate"), patch);
    }
    if (spec == "bump") {
        double cu, cv, r0;
        if (patch.domain.shape() == Domain2::Shape::Rectangle) {
            cu = 0.5 * (patch.domain.u0() + patch.domain.u1());
            cv = 0.5 * (patch.domain.v0() + patch.domain.v1());
            r0 = 0.45 * std::min(patch.domain.u1() - patch.domain.u0(),
                                 patch.domain.v1() - patch.domain.v0());
        } else {
            cu = patch.domain.center_u();
            cv = patch.domain.center_v();
            r0 = 0.9 * patch.domain.radius();
        }
        return FlexField{Field(), Field(), bump_field(cu, cv, r0)};
    }
    const auto parts = split(spec, ',');
    if (parts.size() == 3)
        return FlexField{expr_field(parts[0]), expr_field(parts[1]), expr_field(parts[2])};
    throw ValidationError("flex spec must be 'xi,eta,zeta' expressions, a catalog name "
                          "(rigid:..., rigid-translation, rigid-rotation, bump), or construct:NUxNV");
}

}  // namespace flexvar
