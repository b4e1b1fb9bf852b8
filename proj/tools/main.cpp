#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "commands.hpp"
#include "descriptor.hpp"
#include "hsd/errors.hpp"

namespace {

using hsd::cli::MapDescriptor;
using hsd::cli::RunConfig;

struct MapFlags {
    std::string kind;
    std::string desc_path;
    std::optional<double> a, R, r, lambda;
    std::string alpha;
    std::vector<std::string> transforms;  // "koebe:z" or "affine:z", applied in order
};

void add_map_flags(CLI::App* cmd, MapFlags& m) {
    cmd->add_option("--kind", m.kind,
                    "map kind: identity, automorphism, generalized_koebe, lens, analytic_koebe, "
                    "strip, harmonic_koebe, f_r, extremal");
    cmd->add_option("--desc", m.desc_path, "JSON descriptor file (alternative to --kind)");
    cmd->add_option("--a", m.a, "generalized Koebe exponent");
    cmd->add_option("--R", m.R, "lens / extremal dilatation parameter");
    cmd->add_option("--r", m.r, "f_r shear parameter");
    cmd->add_option("--lambda", m.lambda, "Schwarzian norm bound");
    cmd->add_option("--alpha", m.alpha, "automorphism parameter, e.g. 0.3-0.1i");
    cmd->add_option("--transform", m.transforms,
                    "transform to apply, in order: koebe:ZETA or affine:EPS");
}

MapDescriptor descriptor_from_flags(const MapFlags& m) {
    if (!m.desc_path.empty()) {
        std::ifstream in(m.desc_path);
        if (!in) throw hsd::InvalidParameter("cannot read descriptor file '" + m.desc_path + "'");
        nlohmann::json j;
        in >> j;
        return hsd::cli::descriptor_from_json(j);
    }
    if (m.kind.empty()) throw hsd::InvalidParameter("either --kind or --desc is required");
    MapDescriptor d;
    d.kind = m.kind;
    if (m.a) d.params["a"] = *m.a;
    if (m.R) d.params["R"] = *m.R;
    if (m.r) d.params["r"] = *m.r;
    if (m.lambda) d.params["lambda"] = *m.lambda;
    if (!m.alpha.empty()) {
        const hsd::cplx alpha = hsd::cli::parse_complex(m.alpha);
        d.params["alpha-re"] = alpha.real();
        d.params["alpha-im"] = alpha.imag();
    }
    for (const std::string& t : m.transforms) {
        const auto colon = t.find(':');
        if (colon == std::string::npos)
            throw hsd::InvalidParameter("transform must look like koebe:0.3+0i or affine:0.1-0.2i");
        const std::string what = t.substr(0, colon);
        MapDescriptor::Transform tr{};
        tr.arg = hsd::cli::parse_complex(t.substr(colon + 1));
        if (what == "koebe")
            tr.kind = MapDescriptor::Transform::Kind::koebe;
        else if (what == "affine")
            tr.kind = MapDescriptor::Transform::Kind::affine;
        else
            throw hsd::InvalidParameter("unknown transform '" + what + "'");
        d.transforms.push_back(tr);
    }
    return d;
}

void add_run_flags(CLI::App* cmd, RunConfig& cfg, std::string& config_path) {
    cmd->add_option("--config", config_path, "JSON config file with run settings");
    cmd->add_option("--nr", cfg.n_radii, "radii in the scan grid");
    cmd->add_option("--ntheta", cfg.n_angles, "angles in the scan grid");
    cmd->add_option("--refine-tol", cfg.refine_tol, "refinement position tolerance");
    cmd->add_option("--ladder-first", cfg.ladder_first, "first boundary-ladder exponent");
    cmd->add_option("--ladder-last", cfg.ladder_last, "last boundary-ladder exponent");
    cmd->add_option("--format", cfg.format, "output format: json or csv");
    cmd->add_option("--out", cfg.out, "output file (default stdout)");
}

void apply_config_file(const std::string& path, const CLI::App* cmd, RunConfig& cfg) {
    if (path.empty()) return;
    std::ifstream in(path);
    if (!in) throw hsd::InvalidParameter("cannot read config file '" + path + "'");
    nlohmann::json j;
    in >> j;
    // Flags given on the command line win over the file.
    const auto fresh = [&](const char* flag) { return cmd->count(flag) == 0; };
    if (j.contains("nr") && fresh("--nr")) cfg.n_radii = j["nr"].get<int>();
    if (j.contains("ntheta") && fresh("--ntheta")) cfg.n_angles = j["ntheta"].get<int>();
    if (j.contains("refine_tol") && fresh("--refine-tol"))
        cfg.refine_tol = j["refine_tol"].get<double>();
    if (j.contains("ladder_first") && fresh("--ladder-first"))
        cfg.ladder_first = j["ladder_first"].get<int>();
    if (j.contains("ladder_last") && fresh("--ladder-last"))
        cfg.ladder_last = j["ladder_last"].get<int>();
    if (j.contains("format") && fresh("--format")) cfg.format = j["format"].get<std::string>();
    if (j.contains("out") && fresh("--out")) cfg.out = j["out"].get<std::string>();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Schwarzian derivatives of planar harmonic mappings on the unit disk"};
    app.require_subcommand(1);

    MapFlags map_flags;
    RunConfig cfg;
    std::string config_path;
    std::string z_text;
    std::optional<double> order_lambda, order_R;
    std::optional<double> norm_expect;
    double norm_expect_tol = 1e-6;
    double ext_lambda = 0.0, ext_R = 1.0;
    bool skip_norm_check = false;
    std::string suite = "acceptance";

    CLI::App* eval = app.add_subcommand("eval", "evaluate jets and the Schwarzian at a point");
    add_map_flags(eval, map_flags);
    add_run_flags(eval, cfg, config_path);
    eval->add_option("--z", z_text, "evaluation point, e.g. 0+0.4i")->required();

    CLI::App* norm = app.add_subcommand("norm", "estimate the Schwarzian norm over the disk");
    add_map_flags(norm, map_flags);
    add_run_flags(norm, cfg, config_path);
    norm->add_option("--expect", norm_expect, "fail (exit 1) unless the value matches");
    norm->add_option("--expect-tol", norm_expect_tol, "tolerance for --expect");

    CLI::App* order = app.add_subcommand("order", "order of the norm-bounded harmonic family");
    add_run_flags(order, cfg, config_path);
    order->add_option("--lambda", order_lambda, "Schwarzian norm bound")->required();
    order->add_option("--R", order_R, "dilatation sup (required for 0 < lambda < 3/2)");

    CLI::App* extremal = app.add_subcommand("extremal", "construct and check the extremal map");
    add_run_flags(extremal, cfg, config_path);
    extremal->add_option("--lambda", ext_lambda, "Schwarzian norm target")->required();
    extremal->add_option("--R", ext_R, "dilatation parameter in [0, 1]");
    extremal->add_flag("--skip-norm-check", skip_norm_check, "report only, no norm estimation");

    CLI::App* heatmap = app.add_subcommand("heatmap", "scaled-Schwarzian CSV over the scan grid");
    add_map_flags(heatmap, map_flags);
    add_run_flags(heatmap, cfg, config_path);

    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", suite, "suite name (acceptance)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return hsd::cli::kExitUsage;
    }

    try {
        CLI::App* active = app.get_subcommands().front();
        apply_config_file(config_path, active, cfg);
        cfg.validate();
        if (active == eval)
            return hsd::cli::cmd_eval(descriptor_from_flags(map_flags),
                                      hsd::cli::parse_complex(z_text), cfg, std::cout);
        if (active == norm)
            return hsd::cli::cmd_norm(descriptor_from_flags(map_flags), cfg, norm_expect,
                                      norm_expect_tol, std::cout);
        if (active == order) return hsd::cli::cmd_order(*order_lambda, order_R, cfg, std::cout);
        if (active == extremal)
            return hsd::cli::cmd_extremal(ext_lambda, ext_R, cfg, !skip_norm_check, std::cout);
        if (active == heatmap)
            return hsd::cli::cmd_heatmap(descriptor_from_flags(map_flags), cfg, std::cout);
        if (active == verify) return hsd::cli::cmd_verify(suite, std::cout);
    } catch (const hsd::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return hsd::cli::kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return hsd::cli::kExitUsage;
    }
    return hsd::cli::kExitUsage;
}
