#include "cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "output.hpp"
#include "spectral_portrait/errors.hpp"
#include "spectral_portrait/parallel.hpp"

namespace spectral_portrait::cli {

const char* to_string(Command c) {
    switch (c) {
        case Command::Portrait: return "portrait";
        case Command::Graph: return "graph";
        case Command::Predict: return "predict";
        case Command::Compare: return "compare";
        case Command::Stokes: return "stokes";
    }
    return "?";
}

Command command_from_string(const std::string& s) {
    for (Command c : {Command::Portrait, Command::Graph, Command::Predict, Command::Compare, Command::Stokes})
        if (s == to_string(c)) return c;
    throw ConfigError("unknown command '" + s + "' (portrait|graph|predict|compare|stokes)");
}

void RunConfig::fill_from(const RunConfig& o) {
    auto take = [](auto& mine, const auto& theirs) {
        if (!mine && theirs) mine = theirs;
    };
    take(command, o.command);
    take(profile, o.profile);
    take(beta, o.beta);
    take(coeffs, o.coeffs);
    take(eps, o.eps);
    take(alpha, o.alpha);
    take(reynolds, o.reynolds);
    take(sigma, o.sigma);
    take(depth, o.depth);
    take(tau, o.tau);
    take(delta, o.delta);
    take(n, o.n);
    take(lambda, o.lambda);
    take(bc, o.bc);
    take(out, o.out);
    take(formats, o.formats);
    take(sign, o.sign);
    take(trust_constant, o.trust_constant);
}

namespace {

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    for (std::string item; std::getline(ss, item, ',');)
        if (!item.empty()) out.push_back(item);
    return out;
}

double parse_number(const std::string& s, const std::string& field) {
    try {
        std::size_t used = 0;
        const double v = std::stod(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ConfigError("field " + field + ": '" + s + "' is not a number");
    }
}

cplx parse_complex(const std::string& s) {
    const auto parts = split_list(s);
    if (parts.size() != 2) throw ConfigError("field lambda: expected 're,im', got '" + s + "'");
    return {parse_number(parts[0], "lambda"), parse_number(parts[1], "lambda")};
}

SignConvention parse_sign(const std::string& s) {
    if (s == "plus_i") return SignConvention::PlusI;
    if (s == "minus_i") return SignConvention::MinusI;
    throw ConfigError("field sign-convention: expected plus_i or minus_i, got '" + s + "'");
}

BoundaryCondition parse_bc(const std::string& s) {
    for (auto bc : {BoundaryCondition::Dirichlet, BoundaryCondition::MixedLeftNeumann, BoundaryCondition::Clamped})
        if (s == to_string(bc)) return bc;
    throw ConfigError("field bc: expected dirichlet or mixed_left_neumann, got '" + s + "'");
}

}  // namespace

RunConfig config_from_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ConfigError("config must be a JSON object");
    RunConfig c;
    try {
        for (auto it = j.begin(); it != j.end(); ++it) {
            const std::string& k = it.key();
            const auto& v = it.value();
            if (k == "command") c.command = command_from_string(v.get<std::string>());
            else if (k == "profile") c.profile = v.get<std::string>();
            else if (k == "beta") c.beta = v.get<double>();
            else if (k == "coeffs") c.coeffs = v.get<std::vector<double>>();
            else if (k == "eps") c.eps = v.get<double>();
            else if (k == "alpha") c.alpha = v.get<double>();
            else if (k == "reynolds") c.reynolds = v.get<double>();
            else if (k == "sigma") c.sigma = v.get<double>();
            else if (k == "depth") c.depth = v.get<double>();
            else if (k == "tau") c.tau = v.get<double>();
            else if (k == "delta") c.delta = v.get<double>();
            else if (k == "n") c.n = v.get<int>();
            else if (k == "lambda") {
                const auto xy = v.get<std::vector<double>>();
                if (xy.size() != 2) throw ConfigError("field lambda: expected [re, im]");
                c.lambda = cplx(xy[0], xy[1]);
            } else if (k == "bc") c.bc = v.get<std::string>();
            else if (k == "out") c.out = v.get<std::string>();
            else if (k == "format") c.formats = split_list(v.get<std::string>());
            else if (k == "sign_convention") c.sign = parse_sign(v.get<std::string>());
            else if (k == "trust_constant") c.trust_constant = v.get<double>();
            else throw ConfigError("unknown config field '" + k + "'");
        }
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("config field has the wrong type: ") + e.what());
    }
    return c;
}

std::optional<RunConfig> parse_args(int argc, const char* const* argv, std::ostream& out) {
    CLI::App app{"Limit spectral graphs, eigenvalue predictions and discretized spectra", "spectral-portrait"};
    app.require_subcommand(0, 1);
    for (Command c : {Command::Portrait, Command::Graph, Command::Predict, Command::Compare, Command::Stokes})
        app.add_subcommand(to_string(c))->fallthrough();

    RunConfig c;
    std::string config_path, lambda, format, sign, coeffs;
    app.add_option("--config", config_path, "JSON document with the same fields; flags win");
    app.add_option("--profile", c.profile, "linear | quadratic | shifted_square | half_sine");
    app.add_option("--beta", c.beta, "shift of the quadratic (x - beta)^2");
    app.add_option("--coeffs", coeffs, "a2,a1,a0 of a quadratic a2 x^2 + a1 x + a0");
    app.add_option("--eps", c.eps, "small parameter of the model problem");
    app.add_option("--alpha", c.alpha, "wave number (Orr-Sommerfeld)");
    app.add_option("--reynolds", c.reynolds, "Reynolds number (Orr-Sommerfeld)");
    app.add_option("--n", c.n, "polynomial degree of the collocation grid");
    app.add_option("--sigma", c.sigma, "knot neighbourhood parameter (default 0.5)");
    app.add_option("--tau", c.tau, "graph distance tolerance (default 0.05)");
    app.add_option("--depth", c.depth, "depth below the real axis (default 6)");
    app.add_option("--delta", c.delta, "excluded neighbourhood radius for predictions (default 0.1)");
    app.add_option("--bc", c.bc, "dirichlet | mixed_left_neumann (model problems)");
    app.add_option("--lambda", lambda, "spectral parameter re,im (stokes)");
    app.add_option("--trust-constant", c.trust_constant, "constant C of the trust radii (default 10)");
    app.add_option("--out", c.out, "output directory (default .)");
    app.add_option("--format", format, "comma list of csv, json, svg (default all)");
    app.add_option("--sign-convention", sign, "plus_i | minus_i (default plus_i)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return std::nullopt;
    } catch (const CLI::ParseError& e) {
        throw ConfigError(e.what());
    }
    for (const auto* sub : app.get_subcommands()) c.command = command_from_string(sub->get_name());
    if (!lambda.empty()) c.lambda = parse_complex(lambda);
    if (!format.empty()) c.formats = split_list(format);
    if (!sign.empty()) c.sign = parse_sign(sign);
    if (!coeffs.empty()) {
        std::vector<double> v;
        for (const auto& s : split_list(coeffs)) v.push_back(parse_number(s, "coeffs"));
        c.coeffs = v;
    }
    if (!config_path.empty()) {
        std::ifstream f(config_path);
        if (!f) throw ConfigError("cannot read config " + config_path);
        std::stringstream ss;
        ss << f.rdbuf();
        c.fill_from(config_from_json(ss.str()));
    }
    return c;
}

Profile make_profile(const std::string& name, std::optional<double> beta, const std::optional<std::vector<double>>& coeffs) {
    if (name == "linear") return Profile::linear();
    if (name == "shifted_square") return Profile::shifted_square();
    if (name == "half_sine") return Profile::half_sine();
    if (name == "quadratic") {
        if (coeffs) {
            if (coeffs->size() != 3) throw ConfigError("field coeffs: expected a2,a1,a0");
            try {
                return Profile::quadratic_from((*coeffs)[0], (*coeffs)[1], (*coeffs)[2]);
            } catch (const Error& e) {
                throw ConfigError(std::string("field coeffs: ") + e.what());
            }
        }
        if (!beta) throw ConfigError("missing field: beta (or coeffs) for the quadratic profile");
        if (!(*beta > -1.0 && *beta < 1.0)) throw ConfigError("field beta: must lie in (-1, 1)");
        return Profile::quadratic(*beta);
    }
    throw ConfigError("field profile: unknown '" + name + "' (linear|quadratic|shifted_square|half_sine)");
}

ResolvedConfig resolve(const RunConfig& c) {
    if (!c.command) throw ConfigError("missing field: command");
    if (!c.profile) throw ConfigError("missing field: profile");
    ResolvedConfig r{*c.command, make_profile(*c.profile, c.beta, c.coeffs)};
    const bool has_model = c.eps.has_value();
    const bool has_os = c.alpha.has_value() || c.reynolds.has_value();
    if (has_model && has_os) throw ConfigError("eps conflicts with alpha/reynolds: choose the model or the Orr-Sommerfeld problem");
    if (has_os) {
        if (!c.alpha) throw ConfigError("missing field: alpha");
        if (!c.reynolds) throw ConfigError("missing field: reynolds");
        if (!(*c.alpha > 0.0)) throw ConfigError("field alpha: must be positive");
        if (!(*c.reynolds > 0.0)) throw ConfigError("field reynolds: must be positive");
        r.orr_sommerfeld = true;
        r.alpha = *c.alpha;
        r.reynolds = *c.reynolds;
        r.eps = 1.0 / (r.alpha * r.reynolds);
    } else if (has_model) {
        if (!(*c.eps > 0.0)) throw ConfigError("field eps: must be positive");
        r.eps = *c.eps;
    }
    const bool needs_problem = r.command == Command::Portrait || r.command == Command::Predict || r.command == Command::Compare;
    if (needs_problem && !has_model && !has_os) throw ConfigError("missing field: eps (or alpha and reynolds)");
    if (r.command == Command::Stokes) {
        if (!c.lambda) throw ConfigError("missing field: lambda");
        r.lambda = *c.lambda;
    }
    if (r.command == Command::Predict && r.orr_sommerfeld && r.profile.kind() != ProfileKind::Linear)
        throw ConfigError("field profile: Orr-Sommerfeld predictions exist for the linear profile only");
    r.n = c.n.value_or(r.orr_sommerfeld ? 200 : 400);
    if (r.n < 8 || r.n > 2048) throw ConfigError("field n: must lie in [8, 2048]");
    r.sigma = c.sigma.value_or(0.5);
    r.tau = c.tau.value_or(0.05);
    r.depth = c.depth.value_or(6.0);
    r.delta = c.delta.value_or(0.1);
    r.trust_constant = c.trust_constant.value_or(default_trust_constant);
    if (!(r.sigma > 0.0)) throw ConfigError("field sigma: must be positive");
    if (!(r.tau > 0.0)) throw ConfigError("field tau: must be positive");
    if (!(r.depth > 0.0)) throw ConfigError("field depth: must be positive");
    if (!(r.delta > 0.0)) throw ConfigError("field delta: must be positive");
    if (c.bc) {
        r.bc = parse_bc(*c.bc);
        if (r.bc == BoundaryCondition::Clamped) throw ConfigError("field bc: clamped is implied by the Orr-Sommerfeld problem");
    }
    r.out = c.out.value_or(".");
    if (c.formats) {
        r.csv = r.json = r.svg = false;
        for (const auto& f : *c.formats) {
            if (f == "csv") r.csv = true;
            else if (f == "json") r.json = true;
            else if (f == "svg") r.svg = true;
            else throw ConfigError("field format: unknown '" + f + "' (csv, json, svg)");
        }
    }
    r.sign = c.sign.value_or(SignConvention::PlusI);
    return r;
}

namespace {

const char* sign_name(SignConvention s) { return s == SignConvention::PlusI ? "plus_i" : "minus_i"; }

// Outputs are normalized to the lower half-plane: the minus_i spectrum is
// conjugated back before any comparison with the graph.
std::vector<cplx> normalized(const std::vector<cplx>& z, SignConvention s) {
    if (s == SignConvention::PlusI) return z;
    std::vector<cplx> out;
    for (cplx w : z) out.push_back(std::conj(w));
    return out;
}

struct Solved {
    Spectrum fine, coarse, filtered;
};

Solved solve(const ResolvedConfig& c) {
    const int n_coarse = std::max(8, static_cast<int>(std::lround(0.8 * c.n)));
    Solved s;
    parallel_for(2, [&](std::size_t i) {
        const int n = i == 0 ? c.n : n_coarse;
        Spectrum sp = c.orr_sommerfeld ? os_spectrum(c.profile, c.alpha, c.reynolds, n, c.sign)
                                       : model_spectrum(c.profile, c.eps, c.bc, n, c.sign);
        (i == 0 ? s.fine : s.coarse) = std::move(sp);
    });
    s.filtered = filter_spurious(s.coarse, s.fine);
    return s;
}

struct GraphData {
    std::vector<SpectralCurve> curves;
    std::vector<NamedPoint> knots;
    std::optional<LimitGraph> graph;  // model graph, also used for Orr-Sommerfeld counting
};

GraphData graph_for(const ResolvedConfig& c) {
    GraphData g;
    if (c.orr_sommerfeld && c.profile.kind() == ProfileKind::Linear) {
        g.curves = couette_os_curves(c.eps, c.alpha, c.depth);
        g.knots = {{"knot", cplx(0.0, -1.0 / std::sqrt(3.0))}};
        g.graph = build_limit_graph(c.profile, c.depth);
        return g;
    }
    g.graph = build_limit_graph(c.profile, c.depth);
    g.curves = g.graph->curves;
    g.knots = g.graph->knots;
    return g;
}

// Parameter of the counting function: the model eps, or the one whose
// model coefficient equals 1/(alpha R).
double counting_eps(const ResolvedConfig& c) {
    if (!c.orr_sommerfeld || c.profile.kind() == ProfileKind::Linear) return c.eps;
    return std::sqrt(c.eps);
}

std::vector<Prediction> predictions_for(const ResolvedConfig& c, const GraphData& g) {
    if (c.orr_sommerfeld) return predict_os_couette(c.alpha, c.reynolds, c.sigma, c.depth, c.trust_constant);
    if (c.profile.kind() == ProfileKind::Linear)
        return predict_model_couette(c.eps, c.sigma, c.depth, c.trust_constant).predictions;
    return predict_wkb(c.profile, c.eps, *g.graph, c.delta, c.trust_constant);
}

// Neighbourhoods where the localization statements give no information.
std::vector<Disk> exemptions(const ResolvedConfig& c) {
    if (c.profile.kind() != ProfileKind::Linear) return {};
    const cplx knot(0.0, -1.0 / std::sqrt(3.0));
    const double log_eps = std::abs(std::log(c.eps));
    if (!c.orr_sommerfeld) return {{"U_0", knot, c.sigma * std::sqrt(c.eps) * log_eps}};
    const double r1 = std::cbrt(c.eps) * log_eps;
    const double r0 = 2.0 / 3.0 * std::pow(0.75, 0.75) * std::sqrt(c.eps) * log_eps;
    return {{"U_-1", cplx(-1.0, 0.0), r1}, {"U_1", cplx(1.0, 0.0), r1}, {"U_0", knot, r0}};
}

cplx sample_at(const SpectralCurve& curve, double fraction) {
    const std::size_t i = static_cast<std::size_t>(std::lround(fraction * (curve.samples.size() - 1)));
    return curve.samples[i];
}

std::vector<CountingRow> counting_for(const ResolvedConfig& c, const std::vector<cplx>& eig, const LimitGraph& graph,
                                      const std::vector<Disk>& disks) {
    std::vector<CountingRow> rows;
    const double eps = counting_eps(c);
    if (c.profile.kind() == ProfileKind::Linear) {
        std::vector<cplx> probes;
        for (double rho : {2.0, 3.0, 4.0})
            if (rho <= c.depth) probes.emplace_back(0.0, -rho);
        std::vector<Disk> u0;
        for (const auto& d : disks)
            if (d.name == "U_0") u0.push_back(d);
        return compare_counting(eig, graph, CurveTag::GammaInfty, eps, probes, c.tau, u0);
    }
    for (const auto& curve : graph.curves) {
        if (curve.excluded || curve.samples.size() < 2) continue;
        if (c.orr_sommerfeld && curve.tag != CurveTag::GammaInfty) continue;
        std::vector<cplx> probes;
        for (double f : {0.25, 0.5, 0.75, 1.0}) probes.push_back(sample_at(curve, f));
        const auto part = compare_counting(eig, graph, curve.tag, eps, probes, c.tau, disks);
        rows.insert(rows.end(), part.begin(), part.end());
    }
    return rows;
}

Viewport view_for(const ResolvedConfig& c) {
    const auto [lo, hi] = semistrip(c.profile);
    return Viewport::around(lo, hi, -c.depth, 0.0);
}

void emit(const ResolvedConfig& c, std::ostream& log, const std::string& name, const std::string& text) {
    write_file(c.out, name, text);
    log << "wrote " << c.out << "/" << name << "\n";
}

std::string short_num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

std::string title(const ResolvedConfig& c) {
    std::string t = c.profile.label();
    if (c.orr_sommerfeld) t += " Orr-Sommerfeld alpha=" + short_num(c.alpha) + " R=" + short_num(c.reynolds);
    else t += " eps=" + short_num(c.eps);
    return t + " n=" + std::to_string(c.n);
}

int run_portrait(const ResolvedConfig& c, std::ostream& log) {
    const Solved s = solve(c);
    log << "eigenvalues " << s.fine.eigenvalues.size() << ", kept " << s.filtered.kept().size() << "\n";
    if (c.csv) emit(c, log, "spectrum.csv", spectrum_csv(s.filtered));
    if (c.json) emit(c, log, "spectrum.json", dump(to_json(s.filtered)));
    if (c.svg) {
        SvgScene scene{view_for(c), title(c)};
        scene.points = s.filtered.kept();
        scene.curves = graph_for(c).curves;
        if (c.sign == SignConvention::MinusI) {
            // Raw minus_i spectra sit in the upper half-plane; mirror the overlay.
            for (auto& curve : scene.curves)
                for (auto& z : curve.samples) z = std::conj(z);
            scene.view = Viewport{scene.view.x_lo, scene.view.x_hi, -scene.view.y_hi, -scene.view.y_lo};
        }
        emit(c, log, "portrait.svg", render_svg(scene));
    }
    return 0;
}

int run_graph(const ResolvedConfig& c, std::ostream& log) {
    const GraphData g = graph_for(c);
    log << "curves " << g.curves.size() << ", knots " << g.knots.size() << "\n";
    if (c.csv) emit(c, log, "graph.csv", curves_csv(g.curves));
    if (c.json) emit(c, log, "graph.json", dump(to_json(g.curves, g.knots)));
    if (c.svg) {
        SvgScene scene{view_for(c), title(c)};
        scene.curves = g.curves;
        emit(c, log, "graph.svg", render_svg(scene));
    }
    return 0;
}

int run_predict(const ResolvedConfig& c, std::ostream& log) {
    const GraphData g = graph_for(c);
    const auto preds = predictions_for(c, g);
    log << "predictions " << preds.size() << "\n";
    if (c.csv) emit(c, log, "predictions.csv", predictions_csv(preds));
    if (c.json) emit(c, log, "predictions.json", dump(to_json(preds)));
    if (c.svg) {
        SvgScene scene{view_for(c), title(c)};
        scene.curves = g.curves;
        scene.predictions = preds;
        emit(c, log, "predictions.svg", render_svg(scene));
    }
    return 0;
}

int run_compare(const ResolvedConfig& c, std::ostream& log) {
    const Solved s = solve(c);
    const GraphData g = graph_for(c);
    const std::vector<cplx> eig = normalized(s.filtered.kept(), c.sign);
    const std::vector<Disk> disks = exemptions(c);

    std::vector<Prediction> preds;
    std::vector<std::string> notes;
    const bool has_predictions = !(c.orr_sommerfeld && c.profile.kind() != ProfileKind::Linear);
    if (has_predictions) {
        try {
            preds = predictions_for(c, g);
        } catch (const EmptyWindow& e) {
            notes.push_back(std::string("no predictions: ") + e.what());
        }
    } else {
        notes.push_back("graph and counting only: no eigenvalue-level predictions for this Orr-Sommerfeld profile");
    }
    MatchReport report = match_predictions(eig, preds, 1.0, 1e-6);
    report.meta.problem = s.fine.meta.problem;
    report.meta.profile = c.profile.label();
    report.meta.eps = c.eps;
    report.meta.alpha = c.alpha;
    report.meta.reynolds = c.reynolds;
    report.meta.n = c.n;
    report.meta.sigma = c.sigma;
    report.meta.trust_constant = c.trust_constant;
    report.meta.sign = c.sign;
    if (c.sign == SignConvention::MinusI) notes.push_back("eigenvalues conjugated to the lower half-plane before comparison");
    report.meta.notes = notes;
    report.graph = graph_distance(eig, g.curves, c.tau, c.depth, disks);
    report.counting = counting_for(c, eig, *g.graph, disks);
    // Odd profiles give a spectrum symmetric under lambda -> -conj(lambda).
    const bool symmetric = c.profile.kind() == ProfileKind::Linear || c.profile.kind() == ProfileKind::HalfSine;
    if (symmetric) report.symmetry_defect = symmetry_defect(eig);

    const double fraction = report.matched_fraction(disks);
    const bool graph_ok = report.graph.violations.empty();
    const bool match_ok = fraction >= 0.9 && report.uniqueness_violations.empty();
    log << "graph: tested " << report.graph.tested << ", exempt " << report.graph.exempt << ", max distance "
        << fmt(report.graph.max_distance) << ", violations " << report.graph.violations.size() << "\n";
    log << "matching: " << report.pairs.size() << " of " << preds.size() << " paired, fraction outside exemptions "
        << fmt(fraction) << ", uniqueness violations " << report.uniqueness_violations.size() << "\n";

    if (c.json) emit(c, log, "report.json", dump(to_json(report)));
    if (c.csv) {
        emit(c, log, "spectrum.csv", spectrum_csv(s.filtered));
        emit(c, log, "predictions.csv", predictions_csv(preds));
    }
    if (c.svg) {
        SvgScene scene{view_for(c), title(c)};
        scene.points = eig;
        scene.curves = g.curves;
        scene.predictions = preds;
        scene.disks = disks;
        emit(c, log, "compare.svg", render_svg(scene));
    }
    return graph_ok && match_ok ? 0 : 2;
}

int run_stokes(const ResolvedConfig& c, std::ostream& log) {
    const auto complexes = trace_stokes(c.profile, c.lambda, 4.0);
    log << "turning points " << complexes.size() << "\n";
    if (c.csv) emit(c, log, "stokes.csv", stokes_csv(complexes));
    if (c.json) emit(c, log, "stokes.json", dump(to_json(complexes)));
    if (c.svg) {
        SvgScene scene{Viewport::around(-1.5, 1.5, -1.5, 1.5), c.profile.label() + " Stokes lines"};
        scene.lines.push_back({cplx(-1.0, 0.0), cplx(1.0, 0.0)});
        for (const auto& cx : complexes) {
            scene.points.push_back(cx.turning_point);
            for (const auto& l : cx.lines) scene.lines.push_back(l.points);
        }
        emit(c, log, "stokes.svg", render_svg(scene));
    }
    return 0;
}

}  // namespace

int run(const ResolvedConfig& c, std::ostream& log) {
    log << to_string(c.command) << ": " << title(c) << ", sign " << sign_name(c.sign) << "\n";
    switch (c.command) {
        case Command::Portrait: return run_portrait(c, log);
        case Command::Graph: return run_graph(c, log);
        case Command::Predict: return run_predict(c, log);
        case Command::Compare: return run_compare(c, log);
        case Command::Stokes: return run_stokes(c, log);
    }
    return 1;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    try {
        const auto config = parse_args(argc, argv, out);
        if (!config) return 0;
        return run(resolve(*config), out);
    } catch (const ConfigError& e) {
        err << e.what() << "\n";
        return 64;
    } catch (const Error& e) {
        err << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace spectral_portrait::cli
