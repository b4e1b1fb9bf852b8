#include "descriptor.hpp"

#include <charconv>

#include "hsd/errors.hpp"

namespace hsd::cli {

namespace {

double require_param(const MapDescriptor& d, const std::string& key) {
    const auto it = d.params.find(key);
    if (it == d.params.end())
        throw InvalidParameter("descriptor kind '" + d.kind + "' needs parameter '" + key + "'");
    return it->second;
}

double parse_strict_double(const std::string& s) {
    double v{};
    const char* begin = s.data();
    const char* end = s.data() + s.size();
    const auto res = std::from_chars(begin, end, v);
    if (res.ec != std::errc{} || res.ptr != end)
        throw InvalidParameter("cannot parse number '" + s + "'");
    return v;
}

}  // namespace

cplx parse_complex(const std::string& text) {
    std::string s = text;
    s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return c == ' '; }), s.end());
    if (s.empty()) throw InvalidParameter("empty complex literal");

    // Split at the last sign that is not leading and not an exponent sign.
    size_t split = std::string::npos;
    for (size_t i = 1; i < s.size(); ++i) {
        if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') split = i;
    }
    const bool imaginary_tail = s.back() == 'i' || s.back() == 'I';
    if (!imaginary_tail) {
        if (split != std::string::npos)
            throw InvalidParameter("malformed complex literal '" + text + "'");
        return {parse_strict_double(s), 0.0};
    }

    const auto parse_imag = [&](std::string body) {
        if (body.empty() || body == "+") return 1.0;
        if (body == "-") return -1.0;
        return parse_strict_double(body);
    };
    if (split == std::string::npos) return {0.0, parse_imag(s.substr(0, s.size() - 1))};
    return {parse_strict_double(s.substr(0, split)),
            parse_imag(s.substr(split, s.size() - split - 1))};
}

nlohmann::ordered_json to_json(const MapDescriptor& d) {
    nlohmann::ordered_json j;
    j["kind"] = d.kind;
    j["params"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : d.params) j["params"][k] = v;
    j["transforms"] = nlohmann::ordered_json::array();
    for (const auto& t : d.transforms) {
        nlohmann::ordered_json tj;
        if (t.kind == MapDescriptor::Transform::Kind::koebe) {
            tj["type"] = "koebe";
            tj["zeta-re"] = t.arg.real();
            tj["zeta-im"] = t.arg.imag();
        } else {
            tj["type"] = "affine";
            tj["eps-re"] = t.arg.real();
            tj["eps-im"] = t.arg.imag();
        }
        j["transforms"].push_back(tj);
    }
    return j;
}

MapDescriptor descriptor_from_json(const nlohmann::json& j) {
    MapDescriptor d;
    d.kind = j.at("kind").get<std::string>();
    if (j.contains("params"))
        for (const auto& [k, v] : j.at("params").items()) d.params[k] = v.get<double>();
    if (j.contains("transforms")) {
        for (const auto& tj : j.at("transforms")) {
            MapDescriptor::Transform t{};
            const std::string type = tj.at("type").get<std::string>();
            if (type == "koebe") {
                t.kind = MapDescriptor::Transform::Kind::koebe;
                t.arg = {tj.at("zeta-re").get<double>(), tj.at("zeta-im").get<double>()};
            } else if (type == "affine") {
                t.kind = MapDescriptor::Transform::Kind::affine;
                t.arg = {tj.at("eps-re").get<double>(), tj.at("eps-im").get<double>()};
            } else {
                throw InvalidParameter("unknown transform type '" + type + "'");
            }
            d.transforms.push_back(t);
        }
    }
    return d;
}

HarmonicMap build_map(const MapDescriptor& d) {
    const auto base = [&]() -> HarmonicMap {
        if (d.kind == "identity")
            return as_harmonic(AnalyticMap::identity(), AnalyticMap::constant(1.0), true);
        if (d.kind == "automorphism") {
            const cplx alpha{require_param(d, "alpha-re"), require_param(d, "alpha-im")};
            return as_harmonic(make_automorphism(alpha), make_automorphism_prime(alpha),
                               alpha == cplx{});
        }
        if (d.kind == "generalized_koebe") {
            const double a = require_param(d, "a");
            return as_harmonic(make_phi_a(a), make_phi_a_prime(a), true);
        }
        if (d.kind == "lens") {
            const double R = require_param(d, "R");
            return as_harmonic(make_lens(R), make_lens_prime(R), R == 1.0);
        }
        if (d.kind == "analytic_koebe")
            return as_harmonic(make_analytic_koebe(), make_analytic_koebe_prime(), true);
        if (d.kind == "strip")
            return as_harmonic(make_strip(), make_strip_prime(), true);
        if (d.kind == "harmonic_koebe") return make_harmonic_koebe();
        if (d.kind == "f_r") return make_f_r(require_param(d, "r"));
        if (d.kind == "extremal")
            return make_extremal(
                FamilyParams(require_param(d, "lambda"), require_param(d, "R")));
        throw InvalidParameter("unknown map kind '" + d.kind + "'");
    }();

    HarmonicMap f = base;
    for (const auto& t : d.transforms) {
        f = t.kind == MapDescriptor::Transform::Kind::koebe ? koebe_transform(f, t.arg)
                                                            : affine_change(f, t.arg);
    }
    return f;
}

void RunConfig::validate() const {
    if (n_radii <= 0 || n_angles <= 0)
        throw InvalidParameter("grid sizes must be positive");
    if (!(refine_tol > 0.0 && refine_tol <= 1e-4))
        throw InvalidParameter("refine tolerance must lie in (0, 1e-4]");
    if (ladder_first < 1 || ladder_last < ladder_first)
        throw InvalidParameter("boundary ladder depth is malformed");
    if (format != "json" && format != "csv")
        throw InvalidParameter("output format must be json or csv");
}

}  // namespace hsd::cli
