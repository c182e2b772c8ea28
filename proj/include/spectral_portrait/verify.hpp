#pragma once

#include <string>
#include <vector>

#include "spectral_portrait/graph.hpp"
#include "spectral_portrait/linalg.hpp"
#include "spectral_portrait/quantize.hpp"

namespace spectral_portrait {

struct Disk {
    std::string name;
    cplx center;
    double radius = 0.0;
    bool contains(cplx z) const { return std::abs(z - center) <= radius; }
};

struct MatchPair {
    Prediction prediction;
    cplx eigenvalue;
    double distance = 0.0;
    double tolerance = 0.0;
    bool within_radius = false;
};

struct UniquenessViolation {
    Prediction prediction;
    int inside = 0;  // eigenvalues inside the tolerance disk
};

struct GraphCheck {
    double tau = 0.0;
    double depth = 0.0;
    std::vector<double> distances;  // per eigenvalue, -1 when exempt or below depth
    double max_distance = 0.0;
    std::vector<cplx> violations;
    int tested = 0;
    int exempt = 0;
};

struct CountingRow {
    CurveTag tag = CurveTag::GammaInfty;
    cplx probe;
    double n_predicted = 0.0;
    int n_counted = 0;
    int offset = 0;          // integer offset fitted per curve, in [-3, 3]
    double residual = 0.0;   // n_counted - n_predicted - offset
};

struct ReportMeta {
    std::string problem;
    std::string profile;
    double eps = 0.0;
    double alpha = 0.0;
    double reynolds = 0.0;
    int n = 0;
    double sigma = 0.5;
    double trust_constant = default_trust_constant;
    SignConvention sign = SignConvention::PlusI;
    std::vector<std::string> notes;
};

struct MatchReport {
    std::vector<MatchPair> pairs;
    std::vector<Prediction> unmatched_predictions;
    std::vector<cplx> unmatched_eigenvalues;
    std::vector<UniquenessViolation> uniqueness_violations;
    GraphCheck graph;
    std::vector<CountingRow> counting;
    double symmetry_defect = -1.0;
    ReportMeta meta;

    // Matched share of the predictions outside the exemption disks.
    double matched_fraction(const std::vector<Disk>& exempt = {}) const;
};

// Greedy pairing by increasing distance; a pair counts when the distance is
// within max(slack * radius, floor). Each eigenvalue is used at most once.
MatchReport match_predictions(const std::vector<cplx>& eigenvalues, const std::vector<Prediction>& predictions,
                              double slack = 1.0, double floor = 1e-6);
MatchReport match_predictions(const Spectrum& spectrum, const std::vector<Prediction>& predictions, double slack = 1.0,
                              double floor = 1e-6);

double distance_to_curve(cplx z, const SpectralCurve& curve);
double distance_to_curves(cplx z, const std::vector<SpectralCurve>& curves);

// Distances of eigenvalues with |Im| <= depth to the retained curves; those
// inside an exemption disk are skipped.
GraphCheck graph_distance(const std::vector<cplx>& eigenvalues, const std::vector<SpectralCurve>& curves, double tau,
                          double depth, const std::vector<Disk>& exempt = {});
GraphCheck graph_distance(const std::vector<cplx>& eigenvalues, const LimitGraph& graph, double tau, double depth,
                          const std::vector<Disk>& exempt = {});

// Eigenvalues within tau of the curve whose nearest point lies no further
// along the curve than the probe. For gamma_infty the strip covers the whole
// retained graph above the probe, plus the given disks.
int count_in_strip(const std::vector<cplx>& eigenvalues, const LimitGraph& graph, CurveTag tag, cplx probe, double tau,
                   const std::vector<Disk>& extra = {});

// Counting table for probes on one curve with one fitted integer offset.
std::vector<CountingRow> compare_counting(const std::vector<cplx>& eigenvalues, const LimitGraph& graph, CurveTag tag,
                                          double eps, const std::vector<cplx>& probes, double tau,
                                          const std::vector<Disk>& extra = {});

// max over lambda of the distance from -conj(lambda) to the nearest eigenvalue.
double symmetry_defect(const std::vector<cplx>& eigenvalues);

// Largest excursion outside {lo <= Re <= hi, Im <= 0}.
double semistrip_excursion(const std::vector<cplx>& eigenvalues, const Profile& p);

}  // namespace spectral_portrait
