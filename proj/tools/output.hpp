#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "spectral_portrait/phase.hpp"
#include "spectral_portrait/verify.hpp"

namespace spectral_portrait::cli {

using nlohmann::ordered_json;

// Shortest round-trip-safe text of a double: 17 significant digits.
std::string fmt(double v);

std::string spectrum_csv(const Spectrum& s);
std::string curves_csv(const std::vector<SpectralCurve>& curves);
std::string predictions_csv(const std::vector<Prediction>& predictions);
std::string stokes_csv(const std::vector<StokesComplex>& complexes);

ordered_json to_json(cplx z);
ordered_json to_json(const Spectrum& s);
ordered_json to_json(const SpectralCurve& c);
ordered_json to_json(const std::vector<SpectralCurve>& curves, const std::vector<NamedPoint>& knots);
ordered_json to_json(const std::vector<Prediction>& predictions);
ordered_json to_json(const MatchReport& r);
ordered_json to_json(const std::vector<StokesComplex>& complexes);

// Serialized JSON with a trailing newline; numbers at 17 significant digits.
std::string dump(const ordered_json& j);

struct Viewport {
    double x_lo = -1.0, x_hi = 1.0, y_lo = -1.0, y_hi = 0.0;
    // Box plus 10% margin on every side.
    static Viewport around(double x_lo, double x_hi, double y_lo, double y_hi);
};

struct SvgScene {
    Viewport view;
    std::string title;
    std::vector<cplx> points;              // one marker each
    std::vector<SpectralCurve> curves;     // stroked; excluded arcs dashed
    std::vector<Prediction> predictions;   // trust circles
    std::vector<Disk> disks;               // exemption neighbourhoods
    std::vector<std::vector<cplx>> lines;  // plain polylines (Stokes lines, intervals)
};

std::string render_svg(const SvgScene& scene);

// Writes text to dir/name, creating dir; LF line endings.
void write_file(const std::string& dir, const std::string& name, const std::string& text);

}  // namespace spectral_portrait::cli
