#include "contestlab/optimal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "contestlab/errors.hpp"

namespace contestlab {

namespace {

constexpr double kSlopeTieScale = 1e-9;

bool slope_tie(double lambda, double slope) {
    return std::abs(lambda - slope) <= kSlopeTieScale * std::max(1.0, std::abs(slope));
}

}  // namespace

ConcaveEnvelope::ConcaveEnvelope(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
    if (vertices_.empty()) throw ValidationError("envelope needs at least one vertex");
    slopes_.reserve(vertices_.size() - 1);
    for (std::size_t i = 0; i + 1 < vertices_.size(); ++i) {
        const double dc = vertices_[i + 1].C - vertices_[i].C;
        if (dc <= 0.0) throw NumericalError("envelope vertices must have increasing cost");
        slopes_.push_back((vertices_[i + 1].eta - vertices_[i].eta) / dc);
    }
    for (std::size_t i = 0; i + 1 < slopes_.size(); ++i) {
        if (slopes_[i] < slopes_[i + 1] - 1e-9)
            throw NumericalError("envelope slopes must be non-increasing");
    }
}

double ConcaveEnvelope::value(double C) const {
    if (C <= vertices_.front().C) return vertices_.front().eta;
    if (C > vertices_.back().C + 1e-12) return 0.0;
    if (C >= vertices_.back().C) return vertices_.back().eta;
    auto it = std::upper_bound(vertices_.begin(), vertices_.end(), C,
                               [](double x, const Vertex& v) { return x < v.C; });
    const Vertex& hi = *it;
    const Vertex& lo = *(it - 1);
    const double w = (C - lo.C) / (hi.C - lo.C);
    return lo.eta + w * (hi.eta - lo.eta);
}

ConcaveEnvelope upper_envelope(std::vector<ConcaveEnvelope::Vertex> points) {
    if (points.empty()) throw ValidationError("upper envelope needs at least one point");
    std::sort(points.begin(), points.end(), [](const auto& a, const auto& b) {
        if (a.C != b.C) return a.C < b.C;
        return a.eta > b.eta;
    });
    // Collapse duplicate costs, keeping the highest payoff.
    std::vector<ConcaveEnvelope::Vertex> unique_pts;
    for (const auto& p : points) {
        if (!unique_pts.empty() && p.C - unique_pts.back().C <= 1e-15) continue;
        unique_pts.push_back(p);
    }

    std::vector<ConcaveEnvelope::Vertex> hull;
    for (const auto& p : unique_pts) {
        while (hull.size() >= 2) {
            const auto& a = hull[hull.size() - 2];
            const auto& b = hull.back();
            const double s1 = (b.eta - a.eta) / (b.C - a.C);
            const double s2 = (p.eta - b.eta) / (p.C - b.C);
            // Pop interior and collinear points so every vertex is extreme.
            if (s1 <= s2 + 1e-12)
                hull.pop_back();
            else
                break;
        }
        hull.push_back(p);
    }
    return ConcaveEnvelope(std::move(hull));
}

RestrictedFrontier restrict_eta(const FrontierCurve& curve, const FeasibleSet& feasible) {
    if (feasible.empty())
        throw ValidationError("cannot restrict the frontier to an empty feasible set");
    std::vector<RestrictedSample> samples;
    samples.reserve(curve.samples().size() + 2 * feasible.intervals.size());
    for (const auto& fs : curve.samples()) {
        const bool ok = feasible.contains(fs.s);
        samples.push_back({fs.s, fs.C, fs.eta, ok ? fs.eta : 0.0, ok});
    }
    // Interval endpoints must appear exactly: hull vertices and bridge anchors
    // sit there, and grid samples can straddle them.
    for (const auto& iv : feasible.intervals) {
        for (double s : {iv.first, iv.second}) {
            auto it = std::lower_bound(samples.begin(), samples.end(), s,
                                       [](const RestrictedSample& a, double x) { return a.s < x; });
            if (it != samples.end() && std::abs(it->s - s) <= 1e-12) continue;
            if (it != samples.begin() && std::abs((it - 1)->s - s) <= 1e-12) continue;
            const double C = curve.cost(s);
            const double eta = curve.eta(s);
            samples.insert(it, {s, C, eta, eta, true});
        }
    }
    return RestrictedFrontier{std::move(samples), curve, feasible};
}

ConcaveEnvelope concavify(const RestrictedFrontier& restricted) {
    std::vector<ConcaveEnvelope::Vertex> pts;
    pts.push_back({0.0, 0.0, 0.0});
    for (const auto& rs : restricted.samples) {
        if (rs.feasible) pts.push_back({rs.C, rs.eta0, rs.s});
    }
    // Infeasible samples contribute value 0, which the origin vertex already
    // dominates on [0, max feasible C]; beyond that the envelope reports 0.
    return upper_envelope(std::move(pts));
}

double inverse_derivative(const ConcaveEnvelope& envelope, double lambda) {
    const auto& verts = envelope.vertices();
    const auto& slopes = envelope.slopes();
    if (verts.size() == 1) return verts.front().C;
    for (std::size_t j = 0; j < slopes.size(); ++j) {
        // Tie with a segment slope: the whole segment is optimal; report its
        // cheap end. A strict jump at vertex j singles that vertex out.
        if (slope_tie(lambda, slopes[j])) return verts[j].C;
        if (lambda > slopes[j]) return verts[j].C;
    }
    return verts.back().C;
}

namespace {

// True when hull vertex i is incident to a chord: a segment long enough (in
// cost) to have skipped over samples. On a concave arc every sample is a
// vertex and its segments match the sample spacing, so nothing is refined
// there; only bridge and tangency vertices attract extra points.
bool touches_chord(const std::vector<ConcaveEnvelope::Vertex>& verts, std::size_t i,
                   double local_gap) {
    const double left = i > 0 ? verts[i].C - verts[i - 1].C : 0.0;
    const double right = i + 1 < verts.size() ? verts[i + 1].C - verts[i].C : 0.0;
    return std::max(left, right) > 8.0 * std::max(local_gap, 1e-15);
}

// Grid polish: re-sample the frontier inside the sample gaps adjacent to each
// chord-incident hull vertex, then rebuild. Vertices are grid points, so the
// true tangency lies within one gap of them.
ConcaveEnvelope refine_solution(std::vector<RestrictedSample>& samples, const FrontierCurve& curve,
                                const FeasibleSet& feasible, ConcaveEnvelope env, int rounds,
                                int per_gap) {
    for (int r = 0; r < rounds; ++r) {
        std::vector<double> new_s;
        const auto& verts = env.vertices();
        for (std::size_t vi = 0; vi < verts.size(); ++vi) {
            const auto& v = verts[vi];
            if (!(v.s > 0.0)) continue;
            auto it = std::lower_bound(samples.begin(), samples.end(), v.s,
                                       [](const RestrictedSample& a, double x) { return a.s < x; });
            if (it == samples.end() || std::abs(it->s - v.s) > 1e-12) continue;
            const std::size_t idx = static_cast<std::size_t>(it - samples.begin());
            const double lo = idx > 0 ? samples[idx - 1].s : v.s;
            const double hi = idx + 1 < samples.size() ? samples[idx + 1].s : v.s;
            const double gap_C = std::max(idx > 0 ? v.C - samples[idx - 1].C : 0.0,
                                          idx + 1 < samples.size() ? samples[idx + 1].C - v.C
                                                                   : 0.0);
            if (!touches_chord(verts, vi, gap_C)) continue;
            for (int j = 1; j <= per_gap; ++j) {
                const double w = static_cast<double>(j) / (per_gap + 1);
                new_s.push_back(lo + w * (v.s - lo));
                new_s.push_back(v.s + w * (hi - v.s));
            }
        }
        bool changed = false;
        for (double s : new_s) {
            if (!(s > 0.0 && s < 1.0) || !feasible.contains(s)) continue;
            auto it = std::lower_bound(samples.begin(), samples.end(), s,
                                       [](const RestrictedSample& a, double x) { return a.s < x; });
            if (it != samples.end() && std::abs(it->s - s) <= 1e-12) continue;
            if (it != samples.begin() && std::abs((it - 1)->s - s) <= 1e-12) continue;
            const double C = curve.cost(s);
            const double eta = curve.eta(s);
            samples.insert(it, {s, C, eta, eta, true});
            changed = true;
        }
        if (!changed) break;
        std::vector<ConcaveEnvelope::Vertex> pts;
        pts.push_back({0.0, 0.0, 0.0});
        for (const auto& rs : samples)
            if (rs.feasible) pts.push_back({rs.C, rs.eta0, rs.s});
        env = upper_envelope(std::move(pts));
    }
    return env;
}

}  // namespace

OptimalSolution solve(const ContestConfig& config, const TypeDistribution& F,
                      const CostFunction& c, const FeasibleSet& feasible,
                      const SolveOptions& options) {
    config.validate();
    if (feasible.empty()) throw ValidationError("cannot optimize over an empty feasible set");
    FrontierCurve curve = frontier(config, F, c, options.grid);
    RestrictedFrontier restricted = restrict_eta(curve, feasible);
    ConcaveEnvelope env = concavify(restricted);
    env = refine_solution(restricted.samples, curve, feasible, std::move(env),
                          options.refine_rounds, 16);

    const double C_star = inverse_derivative(env, config.lambda);
    // The winner is always a vertex; read its cutoff straight off.
    const ConcaveEnvelope::Vertex* winner = nullptr;
    for (const auto& v : env.vertices()) {
        if (std::abs(v.C - C_star) <= 1e-12 * std::max(1.0, std::abs(C_star))) {
            winner = &v;
            break;
        }
    }
    if (winner == nullptr) throw NumericalError("optimal cost does not match any hull vertex");
    double s_star = winner->s;
    if (!std::isfinite(s_star)) s_star = curve.inverse_cost(C_star);

    OptimalSolution sol;
    sol.C_star = C_star;
    sol.s_star = s_star;
    sol.payoff = winner->eta - config.lambda * C_star;
    if (!options.family.empty()) {
        MechanismFamily fam;
        if (options.family == "quota")
            fam = quota_family(config);
        else if (options.family == "blind")
            fam = blind_eye_family(config);
        else if (options.family == "interpolated")
            fam = interpolated_family(config);
        else
            throw ValidationError("unknown mechanism family: " + options.family);
        sol.mechanism_hint = {options.family, synthesize_mechanism(s_star, fam, config, F, c)};
    }
    return sol;
}

ConcaveEnvelope refine_envelope(std::vector<ConcaveEnvelope::Vertex> points,
                                const std::function<double(double)>& eta_of_C,
                                const std::function<bool(double)>& feasible_C, int rounds) {
    std::sort(points.begin(), points.end(),
              [](const auto& a, const auto& b) { return a.C < b.C; });
    ConcaveEnvelope env = upper_envelope(points);
    for (int r = 0; r < rounds; ++r) {
        std::vector<double> new_C;
        const auto& verts = env.vertices();
        for (std::size_t vi = 0; vi < verts.size(); ++vi) {
            const auto& v = verts[vi];
            auto it = std::lower_bound(points.begin(), points.end(), v.C,
                                       [](const ConcaveEnvelope::Vertex& a, double x) {
                                           return a.C < x;
                                       });
            if (it == points.end() || std::abs(it->C - v.C) > 1e-15) continue;
            const std::size_t idx = static_cast<std::size_t>(it - points.begin());
            const double lo = idx > 0 ? points[idx - 1].C : v.C;
            const double hi = idx + 1 < points.size() ? points[idx + 1].C : v.C;
            if (!touches_chord(verts, vi, std::max(v.C - lo, hi - v.C))) continue;
            for (int j = 1; j <= 16; ++j) {
                const double w = j / 17.0;
                new_C.push_back(lo + w * (v.C - lo));
                new_C.push_back(v.C + w * (hi - v.C));
            }
        }
        bool changed = false;
        for (double C : new_C) {
            if (!feasible_C(C)) continue;
            auto it = std::lower_bound(points.begin(), points.end(), C,
                                       [](const ConcaveEnvelope::Vertex& a, double x) {
                                           return a.C < x;
                                       });
            if (it != points.end() && std::abs(it->C - C) <= 1e-15) continue;
            if (it != points.begin() && std::abs((it - 1)->C - C) <= 1e-15) continue;
            points.insert(it, {C, eta_of_C(C), std::numeric_limits<double>::quiet_NaN()});
            changed = true;
        }
        if (!changed) break;
        env = upper_envelope(points);
    }
    return env;
}

}  // namespace contestlab
