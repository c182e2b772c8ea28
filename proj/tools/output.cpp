#include "output.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "spectral_portrait/errors.hpp"

namespace spectral_portrait::cli {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {

const char* flag_name(const EigenFlags& f) {
    if (!f.converged) return "unconverged";
    return f.spurious ? "spurious" : "kept";
}

}  // namespace

std::string spectrum_csv(const Spectrum& s) {
    std::ostringstream out;
    out << "re,im,flag\n";
    for (std::size_t i = 0; i < s.eigenvalues.size(); ++i) {
        if (s.flags[i].sentinel) continue;
        out << fmt(s.eigenvalues[i].real()) << ',' << fmt(s.eigenvalues[i].imag()) << ',' << flag_name(s.flags[i]) << '\n';
    }
    return out.str();
}

std::string curves_csv(const std::vector<SpectralCurve>& curves) {
    std::ostringstream out;
    out << "curve,mirror,excluded,index,re,im,phase\n";
    for (const auto& c : curves)
        for (std::size_t i = 0; i < c.samples.size(); ++i)
            out << to_string(c.tag) << ',' << (c.mirror ? 1 : 0) << ',' << (c.excluded ? 1 : 0) << ',' << i << ','
                << fmt(c.samples[i].real()) << ',' << fmt(c.samples[i].imag()) << ','
                << fmt(i < c.phase.size() ? c.phase[i] : 0.0) << '\n';
    return out.str();
}

std::string predictions_csv(const std::vector<Prediction>& predictions) {
    std::ostringstream out;
    out << "tag,k,mirror,re,im,radius,phase\n";
    for (const auto& p : predictions)
        out << to_string(p.tag) << ',' << p.k << ',' << (p.mirror ? 1 : 0) << ',' << fmt(p.mu.real()) << ','
            << fmt(p.mu.imag()) << ',' << fmt(p.radius) << ',' << fmt(p.phase_value) << '\n';
    return out.str();
}

std::string stokes_csv(const std::vector<StokesComplex>& complexes) {
    std::ostringstream out;
    out << "complex,line,truncation,index,re,im\n";
    for (std::size_t c = 0; c < complexes.size(); ++c)
        for (const auto& line : complexes[c].lines)
            for (std::size_t i = 0; i < line.points.size(); ++i)
                out << c << ',' << to_string(line.tag) << ',' << to_string(line.truncation) << ',' << i << ','
                    << fmt(line.points[i].real()) << ',' << fmt(line.points[i].imag()) << '\n';
    return out.str();
}

ordered_json to_json(cplx z) { return ordered_json{{"re", z.real()}, {"im", z.imag()}}; }

ordered_json to_json(const Spectrum& s) {
    ordered_json eig = ordered_json::array();
    for (std::size_t i = 0; i < s.eigenvalues.size(); ++i) {
        if (s.flags[i].sentinel) continue;
        eig.push_back({{"re", s.eigenvalues[i].real()}, {"im", s.eigenvalues[i].imag()}, {"flag", flag_name(s.flags[i])}});
    }
    return ordered_json{{"meta",
                         {{"problem", s.meta.problem},
                          {"profile", s.meta.profile},
                          {"bc", s.meta.bc},
                          {"eps", s.meta.eps},
                          {"alpha", s.meta.alpha},
                          {"reynolds", s.meta.reynolds},
                          {"n", s.meta.n},
                          {"sign_convention", s.meta.sign == SignConvention::PlusI ? "plus_i" : "minus_i"},
                          {"precision", s.meta.precision == Precision::Quad ? "quad" : "double"}}},
                        {"eigenvalues", eig}};
}

ordered_json to_json(const SpectralCurve& c) {
    ordered_json pts = ordered_json::array();
    for (std::size_t i = 0; i < c.samples.size(); ++i)
        pts.push_back({c.samples[i].real(), c.samples[i].imag(), i < c.phase.size() ? c.phase[i] : 0.0});
    return ordered_json{{"tag", to_string(c.tag)},   {"mirror", c.mirror},    {"excluded", c.excluded},
                        {"start", to_string(c.start)}, {"end", to_string(c.end)}, {"samples", pts}};
}

ordered_json to_json(const std::vector<SpectralCurve>& curves, const std::vector<NamedPoint>& knots) {
    ordered_json cs = ordered_json::array(), ks = ordered_json::array();
    for (const auto& c : curves) cs.push_back(to_json(c));
    for (const auto& k : knots) ks.push_back({{"name", k.name}, {"re", k.point.real()}, {"im", k.point.imag()}});
    return ordered_json{{"curves", cs}, {"knots", ks}};
}

ordered_json to_json(const std::vector<Prediction>& predictions) {
    ordered_json out = ordered_json::array();
    for (const auto& p : predictions)
        out.push_back({{"tag", to_string(p.tag)},
                       {"k", p.k},
                       {"mirror", p.mirror},
                       {"re", p.mu.real()},
                       {"im", p.mu.imag()},
                       {"radius", p.radius},
                       {"phase", p.phase_value}});
    return out;
}

ordered_json to_json(const MatchReport& r) {
    ordered_json pairs = ordered_json::array();
    for (const auto& p : r.pairs)
        pairs.push_back({{"tag", to_string(p.prediction.tag)},
                         {"k", p.prediction.k},
                         {"mirror", p.prediction.mirror},
                         {"predicted", to_json(p.prediction.mu)},
                         {"eigenvalue", to_json(p.eigenvalue)},
                         {"distance", p.distance},
                         {"tolerance", p.tolerance},
                         {"within_radius", p.within_radius}});
    ordered_json unmatched_pred = to_json(r.unmatched_predictions);
    ordered_json unmatched_eig = ordered_json::array();
    for (cplx z : r.unmatched_eigenvalues) unmatched_eig.push_back(to_json(z));
    ordered_json uniq = ordered_json::array();
    for (const auto& v : r.uniqueness_violations)
        uniq.push_back({{"tag", to_string(v.prediction.tag)}, {"k", v.prediction.k}, {"inside", v.inside}});
    ordered_json dist = ordered_json::array();
    for (double d : r.graph.distances) dist.push_back(d < 0.0 ? ordered_json(nullptr) : ordered_json(d));
    ordered_json viol = ordered_json::array();
    for (cplx z : r.graph.violations) viol.push_back(to_json(z));
    ordered_json counting = ordered_json::array();
    for (const auto& c : r.counting)
        counting.push_back({{"tag", to_string(c.tag)},
                            {"probe", to_json(c.probe)},
                            {"n_predicted", c.n_predicted},
                            {"n_counted", c.n_counted},
                            {"offset_fit", c.offset},
                            {"residual", c.residual}});
    ordered_json notes = r.meta.notes;
    return ordered_json{
        {"meta",
         {{"problem", r.meta.problem},
          {"profile", r.meta.profile},
          {"eps", r.meta.eps},
          {"alpha", r.meta.alpha},
          {"reynolds", r.meta.reynolds},
          {"n", r.meta.n},
          {"sigma", r.meta.sigma},
          {"sign_convention", r.meta.sign == SignConvention::PlusI ? "plus_i" : "minus_i"},
          {"notes", notes}}},
        {"pairs", pairs},
        {"unmatched_predictions", unmatched_pred},
        {"unmatched_eigenvalues", unmatched_eig},
        {"uniqueness_violations", uniq},
        {"graph",
         {{"tau", r.graph.tau},
          {"depth", r.graph.depth},
          {"tested", r.graph.tested},
          {"exempt", r.graph.exempt},
          {"max_distance", r.graph.max_distance},
          {"violations", viol},
          {"distances", dist}}},
        {"counting", counting},
        {"symmetry_defect", r.symmetry_defect < 0.0 ? ordered_json(nullptr) : ordered_json(r.symmetry_defect)},
        {"constants",
         {{"sigma", r.meta.sigma},
          {"C_used", r.meta.trust_constant},
          {"sign_convention", r.meta.sign == SignConvention::PlusI ? "plus_i" : "minus_i"}}}};
}

ordered_json to_json(const std::vector<StokesComplex>& complexes) {
    ordered_json out = ordered_json::array();
    for (const auto& c : complexes) {
        ordered_json lines = ordered_json::array();
        for (const auto& l : c.lines) {
            ordered_json pts = ordered_json::array();
            for (cplx z : l.points) pts.push_back({z.real(), z.imag()});
            lines.push_back({{"tag", to_string(l.tag)},
                             {"truncation", to_string(l.truncation)},
                             {"max_drift", l.max_drift},
                             {"points", pts}});
        }
        out.push_back({{"turning_point", to_json(c.turning_point)}, {"lines", lines}});
    }
    return out;
}

std::string dump(const ordered_json& j) { return j.dump(1) + "\n"; }

Viewport Viewport::around(double x_lo, double x_hi, double y_lo, double y_hi) {
    const double mx = 0.1 * (x_hi - x_lo), my = 0.1 * (y_hi - y_lo);
    return {x_lo - mx, x_hi + mx, y_lo - my, y_hi + my};
}

namespace {

constexpr double canvas = 800.0;

struct Mapper {
    Viewport v;
    double sx, sy;
    explicit Mapper(const Viewport& view)
        : v(view), sx(canvas / (view.x_hi - view.x_lo)), sy(canvas / (view.y_hi - view.y_lo)) {}
    double x(double re) const { return (re - v.x_lo) * sx; }
    double y(double im) const { return (v.y_hi - im) * sy; }
};

std::string px(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

std::string polyline(const Mapper& m, const std::vector<cplx>& pts, const std::string& attrs) {
    std::string s = "<polyline fill=\"none\" " + attrs + " points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (i) s += ' ';
        s += px(m.x(pts[i].real())) + "," + px(m.y(pts[i].imag()));
    }
    return s + "\"/>\n";
}

}  // namespace

std::string render_svg(const SvgScene& scene) {
    const Mapper m(scene.view);
    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << canvas << "\" height=\"" << canvas
        << "\" viewBox=\"0 0 " << canvas << ' ' << canvas << "\">\n"
        << "<title>" << scene.title << "</title>\n"
        << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    // Axes through the origin when visible.
    if (scene.view.y_lo <= 0.0 && 0.0 <= scene.view.y_hi)
        out << "<line class=\"axis\" x1=\"0\" x2=\"" << canvas << "\" y1=\"" << px(m.y(0.0)) << "\" y2=\""
            << px(m.y(0.0)) << "\" stroke=\"#999\" stroke-width=\"0.5\"/>\n";
    if (scene.view.x_lo <= 0.0 && 0.0 <= scene.view.x_hi)
        out << "<line class=\"axis\" y1=\"0\" y2=\"" << canvas << "\" x1=\"" << px(m.x(0.0)) << "\" x2=\""
            << px(m.x(0.0)) << "\" stroke=\"#999\" stroke-width=\"0.5\"/>\n";
    for (const auto& line : scene.lines) out << polyline(m, line, "class=\"line\" stroke=\"#2a6\" stroke-width=\"1\"");
    for (const auto& c : scene.curves)
        out << polyline(m, c.samples,
                        std::string("class=\"curve\" data-tag=\"") + to_string(c.tag) + "\" stroke=\"#c33\" stroke-width=\"1.2\"" +
                            (c.excluded ? " stroke-dasharray=\"4 3\"" : ""));
    for (const auto& d : scene.disks)
        out << "<circle class=\"disk\" cx=\"" << px(m.x(d.center.real())) << "\" cy=\"" << px(m.y(d.center.imag()))
            << "\" r=\"" << px(d.radius * m.sx) << "\" fill=\"none\" stroke=\"#888\" stroke-dasharray=\"2 2\"/>\n";
    for (const auto& p : scene.predictions)
        out << "<circle class=\"prediction\" cx=\"" << px(m.x(p.mu.real())) << "\" cy=\"" << px(m.y(p.mu.imag()))
            << "\" r=\"" << px(std::max(p.radius * m.sx, 3.0)) << "\" fill=\"none\" stroke=\"#36c\"/>\n";
    for (cplx z : scene.points)
        out << "<circle class=\"eig\" cx=\"" << px(m.x(z.real())) << "\" cy=\"" << px(m.y(z.imag()))
            << "\" r=\"2\" fill=\"black\"/>\n";
    out << "</svg>\n";
    return out.str();
}

void write_file(const std::string& dir, const std::string& name, const std::string& text) {
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(dir, ec);
    const fs::path path = fs::path(dir) / name;
    std::ofstream f(path, std::ios::binary);
    if (!f) throw ConfigError("cannot write " + path.string());
    f << text;
}

}  // namespace spectral_portrait::cli
