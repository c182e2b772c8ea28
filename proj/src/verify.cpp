#include "spectral_portrait/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace spectral_portrait {

namespace {

struct Projection {
    double distance;
    double arclength;
};

Projection project(cplx z, const std::vector<cplx>& pts) {
    Projection best{std::numeric_limits<double>::infinity(), 0.0};
    if (pts.empty()) return best;
    if (pts.size() == 1) return {std::abs(z - pts.front()), 0.0};
    double along = 0.0;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        const cplx a = pts[i - 1], d = pts[i] - a;
        const double len2 = std::norm(d), len = std::sqrt(len2);
        const double s = len2 > 0.0 ? std::clamp(((z - a) * std::conj(d)).real() / len2, 0.0, 1.0) : 0.0;
        const double dist = std::abs(z - (a + s * d));
        if (dist < best.distance) best = {dist, along + s * len};
        along += len;
    }
    return best;
}

}  // namespace

double MatchReport::matched_fraction(const std::vector<Disk>& exempt) const {
    auto is_exempt = [&](cplx z) { return std::any_of(exempt.begin(), exempt.end(), [&](const Disk& d) { return d.contains(z); }); };
    int total = 0, hit = 0;
    for (const auto& p : pairs) {
        if (is_exempt(p.prediction.mu)) continue;
        ++total;
        hit += p.within_radius ? 1 : 0;
    }
    for (const auto& p : unmatched_predictions)
        if (!is_exempt(p.mu)) ++total;
    return total == 0 ? 1.0 : static_cast<double>(hit) / total;
}

MatchReport match_predictions(const std::vector<cplx>& eigenvalues, const std::vector<Prediction>& predictions, double slack,
                              double floor) {
    MatchReport report;
    struct Candidate {
        double distance;
        std::size_t pred, eig;
    };
    std::vector<Candidate> cands;
    cands.reserve(predictions.size() * eigenvalues.size());
    for (std::size_t i = 0; i < predictions.size(); ++i)
        for (std::size_t j = 0; j < eigenvalues.size(); ++j)
            cands.push_back({std::abs(predictions[i].mu - eigenvalues[j]), i, j});
    std::stable_sort(cands.begin(), cands.end(), [](const Candidate& x, const Candidate& y) {
        if (x.distance != y.distance) return x.distance < y.distance;
        if (x.pred != y.pred) return x.pred < y.pred;
        return x.eig < y.eig;
    });
    std::vector<bool> pred_used(predictions.size(), false), eig_used(eigenvalues.size(), false);
    std::vector<MatchPair> pairs(predictions.size());
    for (const auto& c : cands) {
        if (pred_used[c.pred] || eig_used[c.eig]) continue;
        const Prediction& p = predictions[c.pred];
        const double tol = std::max(slack * p.radius, floor);
        if (c.distance > tol) continue;
        pred_used[c.pred] = eig_used[c.eig] = true;
        pairs[c.pred] = {p, eigenvalues[c.eig], c.distance, tol, true};
    }
    for (std::size_t i = 0; i < predictions.size(); ++i) {
        const Prediction& p = predictions[i];
        const double tol = std::max(slack * p.radius, floor);
        if (pred_used[i]) {
            report.pairs.push_back(pairs[i]);
        } else {
            report.unmatched_predictions.push_back(p);
        }
        const int inside = static_cast<int>(std::count_if(eigenvalues.begin(), eigenvalues.end(),
                                                          [&](cplx z) { return std::abs(z - p.mu) <= tol; }));
        if (inside > 1) report.uniqueness_violations.push_back({p, inside});
    }
    for (std::size_t j = 0; j < eigenvalues.size(); ++j)
        if (!eig_used[j]) report.unmatched_eigenvalues.push_back(eigenvalues[j]);
    return report;
}

MatchReport match_predictions(const Spectrum& spectrum, const std::vector<Prediction>& predictions, double slack,
                              double floor) {
    MatchReport r = match_predictions(spectrum.kept(), predictions, slack, floor);
    r.meta.problem = spectrum.meta.problem;
    r.meta.profile = spectrum.meta.profile;
    r.meta.eps = spectrum.meta.eps;
    r.meta.alpha = spectrum.meta.alpha;
    r.meta.reynolds = spectrum.meta.reynolds;
    r.meta.n = spectrum.meta.n;
    r.meta.sign = spectrum.meta.sign;
    return r;
}

double distance_to_curve(cplx z, const SpectralCurve& curve) { return project(z, curve.samples).distance; }

double distance_to_curves(cplx z, const std::vector<SpectralCurve>& curves) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& c : curves)
        if (!c.excluded) best = std::min(best, distance_to_curve(z, c));
    return best;
}

GraphCheck graph_distance(const std::vector<cplx>& eigenvalues, const std::vector<SpectralCurve>& curves, double tau,
                          double depth, const std::vector<Disk>& exempt) {
    GraphCheck g;
    g.tau = tau;
    g.depth = depth;
    g.distances.assign(eigenvalues.size(), -1.0);
    for (std::size_t i = 0; i < eigenvalues.size(); ++i) {
        const cplx z = eigenvalues[i];
        if (std::abs(z.imag()) > depth) continue;
        if (std::any_of(exempt.begin(), exempt.end(), [&](const Disk& d) { return d.contains(z); })) {
            ++g.exempt;
            continue;
        }
        const double d = distance_to_curves(z, curves);
        g.distances[i] = d;
        ++g.tested;
        g.max_distance = std::max(g.max_distance, d);
        if (d > tau) g.violations.push_back(z);
    }
    return g;
}

GraphCheck graph_distance(const std::vector<cplx>& eigenvalues, const LimitGraph& graph, double tau, double depth,
                          const std::vector<Disk>& exempt) {
    return graph_distance(eigenvalues, graph.curves, tau, depth, exempt);
}

int count_in_strip(const std::vector<cplx>& eigenvalues, const LimitGraph& graph, CurveTag tag, cplx probe, double tau,
                   const std::vector<Disk>& extra) {
    std::vector<const SpectralCurve*> own;
    for (const auto& c : graph.curves)
        if (!c.excluded && c.tag == tag) own.push_back(&c);
    int count = 0;
    for (cplx z : eigenvalues) {
        if (std::any_of(extra.begin(), extra.end(), [&](const Disk& d) { return d.contains(z); })) {
            ++count;
            continue;
        }
        bool in = false;
        for (const SpectralCurve* c : own) {
            const Projection pz = project(z, c->samples), pp = project(probe, c->samples);
            if (pz.distance <= tau && pz.arclength <= pp.arclength + 1e-12) in = true;
        }
        if (!in && tag == CurveTag::GammaInfty && z.imag() >= probe.imag()) {
            for (const auto& c : graph.curves)
                if (!c.excluded && c.tag != tag && distance_to_curve(z, c) <= tau) in = true;
        }
        count += in ? 1 : 0;
    }
    return count;
}

std::vector<CountingRow> compare_counting(const std::vector<cplx>& eigenvalues, const LimitGraph& graph, CurveTag tag,
                                          double eps, const std::vector<cplx>& probes, double tau,
                                          const std::vector<Disk>& extra) {
    std::vector<CountingRow> rows;
    for (cplx probe : probes) {
        CountingRow r;
        r.tag = tag;
        r.probe = probe;
        r.n_predicted = counting_function(graph.profile, tag, probe, eps);
        r.n_counted = count_in_strip(eigenvalues, graph, tag, probe, tau, extra);
        rows.push_back(r);
    }
    if (rows.empty()) return rows;
    // One integer offset for the curve: the one minimizing the worst residual.
    int best = 0;
    double best_err = std::numeric_limits<double>::infinity();
    for (int o = -3; o <= 3; ++o) {
        double err = 0.0;
        for (const auto& r : rows) err = std::max(err, std::abs(r.n_counted - r.n_predicted - o));
        if (err < best_err) {
            best_err = err;
            best = o;
        }
    }
    for (auto& r : rows) {
        r.offset = best;
        r.residual = r.n_counted - r.n_predicted - best;
    }
    return rows;
}

double symmetry_defect(const std::vector<cplx>& eigenvalues) {
    double worst = 0.0;
    for (cplx z : eigenvalues) {
        const cplx m = -std::conj(z);
        double best = std::numeric_limits<double>::infinity();
        for (cplx w : eigenvalues) best = std::min(best, std::abs(m - w));
        worst = std::max(worst, best);
    }
    return worst;
}

double semistrip_excursion(const std::vector<cplx>& eigenvalues, const Profile& p) {
    const auto [lo, hi] = semistrip(p);
    double worst = 0.0;
    for (cplx z : eigenvalues) {
        worst = std::max(worst, lo - z.real());
        worst = std::max(worst, z.real() - hi);
        worst = std::max(worst, z.imag());
    }
    return worst;
}

}  // namespace spectral_portrait
