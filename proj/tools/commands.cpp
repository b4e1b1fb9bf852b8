#include "commands.hpp"

#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include "hsd/errors.hpp"
#include "hsd/families.hpp"
#include "hsd/format.hpp"
#include "hsd/norms.hpp"
#include "hsd/schwarzian.hpp"
#include "hsd/verification.hpp"

namespace hsd::cli {

namespace {

using nlohmann::ordered_json;

ordered_json complex_json(cplx z) { return ordered_json::array({z.real(), z.imag()}); }

ordered_json jet_json(const Jet3& j) {
    return ordered_json::array(
        {complex_json(j.f0), complex_json(j.f1), complex_json(j.f2), complex_json(j.f3)});
}

GridConfig grid_of(const RunConfig& cfg) {
    GridConfig g;
    g.n_radii = cfg.n_radii;
    g.n_angles = cfg.n_angles;
    g.refine_tol = cfg.refine_tol;
    g.ladder_first = cfg.ladder_first;
    g.ladder_last = cfg.ladder_last;
    return g;
}

ordered_json norm_json(const NormEstimate& est) {
    ordered_json j;
    j["value"] = est.value;
    j["argmax"] = complex_json(est.argmax);
    j["attained"] = est.attained;
    j["grid"] = ordered_json::array({est.n_radii, est.n_angles});
    j["refinement_error"] = est.refinement_error;
    return j;
}

std::string norm_csv(const NormEstimate& est) {
    std::ostringstream os;
    os << "value,argmax_re,argmax_im,attained,n_radii,n_angles,refinement_error\n"
       << format_double(est.value) << ',' << format_complex_csv(est.argmax) << ','
       << (est.attained ? "true" : "false") << ',' << est.n_radii << ',' << est.n_angles << ','
       << format_double(est.refinement_error) << '\n';
    return os.str();
}

}  // namespace

int cmd_eval(const MapDescriptor& desc, cplx z, const RunConfig& cfg, std::ostream& out) {
    if (!in_unit_disk(z)) throw OutOfDomain("evaluation point must satisfy |z| < 1");
    const HarmonicMap f = build_map(desc);
    const Jet3 h = f.analytic_jet(z);
    const Jet3 g = f.co_analytic_jet(z);
    const Jet3 w = f.dilatation_jet(z);
    const SchwarzianSample s = schwarzian(f, z);

    if (cfg.format == "json") {
        ordered_json j;
        j["z"] = complex_json(z);
        j["h"] = jet_json(h);
        j["g"] = jet_json(g);
        j["omega"] = ordered_json::array({complex_json(w.f0), complex_json(w.f1), complex_json(w.f2)});
        j["schwarzian"] = complex_json(s.value);
        j["schwarzian_abs"] = std::abs(s.value);
        j["scaled"] = s.scaled;
        out << j.dump(2) << '\n';
    } else {
        out << "z_re,z_im,"
               "h0_re,h0_im,h1_re,h1_im,h2_re,h2_im,h3_re,h3_im,"
               "g0_re,g0_im,g1_re,g1_im,g2_re,g2_im,g3_re,g3_im,"
               "w0_re,w0_im,w1_re,w1_im,w2_re,w2_im,"
               "S_re,S_im,S_abs,scaled\n";
        out << format_complex_csv(z);
        for (const Jet3& jet : {h, g})
            out << ',' << format_complex_csv(jet.f0) << ',' << format_complex_csv(jet.f1) << ','
                << format_complex_csv(jet.f2) << ',' << format_complex_csv(jet.f3);
        out << ',' << format_complex_csv(w.f0) << ',' << format_complex_csv(w.f1) << ','
            << format_complex_csv(w.f2);
        out << ',' << format_complex_csv(s.value) << ',' << format_double(std::abs(s.value))
            << ',' << format_double(s.scaled) << '\n';
    }
    return kExitOk;
}

int cmd_norm(const MapDescriptor& desc, const RunConfig& cfg, std::optional<double> expect,
             double expect_tol, std::ostream& out) {
    const NormEstimate est = sup_norm(schwarzian_field(build_map(desc)), grid_of(cfg));
    const bool checked = expect.has_value();
    const bool ok = !checked || std::abs(est.value - *expect) <= expect_tol;
    if (cfg.format == "json") {
        ordered_json j = norm_json(est);
        if (checked) {
            j["expect"] = *expect;
            j["expect_tol"] = expect_tol;
            j["check"] = ok ? "pass" : "fail";
        }
        out << j.dump(2) << '\n';
    } else {
        out << norm_csv(est);
        if (checked) out << "check," << (ok ? "pass" : "fail") << '\n';
    }
    return ok ? kExitOk : kExitCheckFailed;
}

int cmd_order(double lambda, std::optional<double> R_sup, const RunConfig& cfg,
              std::ostream& out) {
    const OrderEstimate est = harmonic_order(lambda, R_sup);
    if (cfg.format == "json") {
        ordered_json j;
        j["lambda"] = est.lambda;
        j["R_sup"] = est.R_sup;
        j["order"] = est.order;
        j["half_order"] = est.half_order;
        j["source"] = to_string(est.source);
        j["analytic_order"] = analytic_order(lambda);
        if (lambda > 0.0 && lambda < 1.5)
            j["R_lower_bound"] = dilatation_sup_lower_bound(lambda);
        out << j.dump(2) << '\n';
    } else {
        out << "lambda,R_sup,order,half_order,source,analytic_order\n"
            << format_double(est.lambda) << ',' << format_double(est.R_sup) << ','
            << format_double(est.order) << ',' << format_double(est.half_order) << ','
            << to_string(est.source) << ',' << format_double(analytic_order(lambda)) << '\n';
    }
    return kExitOk;
}

int cmd_extremal(double lambda, double R, const RunConfig& cfg, bool norm_check,
                 std::ostream& out) {
    const FamilyParams p(lambda, R);
    const CoefficientTriple c = extremal_coefficients(p);
    ordered_json j;
    j["lambda"] = p.lambda;
    j["R"] = p.R;
    j["a"] = p.a;
    j["a2"] = complex_json(c.a2);
    j["a3"] = complex_json(c.a3);
    j["b2"] = complex_json(c.b2);
    j["marty_residual"] = marty_residual(c);

    bool ok = true;
    if (norm_check) {
        const NormEstimate est = sup_norm(schwarzian_field(make_extremal(p)), grid_of(cfg));
        ok = std::abs(est.value - p.lambda) <= 1e-5;
        j["norm"] = norm_json(est);
        j["norm_check"] = ok ? "pass" : "fail";
    }
    if (cfg.format == "json") {
        out << j.dump(2) << '\n';
    } else {
        out << "lambda,R,a,marty_residual" << (norm_check ? ",norm,norm_check" : "") << '\n'
            << format_double(p.lambda) << ',' << format_double(p.R) << ',' << format_double(p.a)
            << ',' << format_double(j["marty_residual"].get<double>());
        if (norm_check)
            out << ',' << format_double(j["norm"]["value"].get<double>()) << ','
                << j["norm_check"].get<std::string>();
        out << '\n';
    }
    return ok ? kExitOk : kExitCheckFailed;
}

int cmd_heatmap(const MapDescriptor& desc, const RunConfig& cfg, std::ostream& out) {
    const ScalarField field = schwarzian_field(build_map(desc));
    if (cfg.out.empty()) {
        write_heatmap_csv(out, field, cfg.n_radii, cfg.n_angles);
    } else {
        std::ofstream file(cfg.out, std::ios::binary);
        if (!file) throw InvalidParameter("cannot open output file '" + cfg.out + "'");
        write_heatmap_csv(file, field, cfg.n_radii, cfg.n_angles);
    }
    return kExitOk;
}

int cmd_verify(const std::string& suite, std::ostream& out) {
    if (suite != "acceptance")
        throw InvalidParameter("unknown verification suite '" + suite + "'");
    return run_acceptance(out) ? kExitOk : kExitCheckFailed;
}

}  // namespace hsd::cli
