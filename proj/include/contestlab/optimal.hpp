#pragma once

#include <cmath>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "contestlab/feasible.hpp"
#include "contestlab/outcome.hpp"

namespace contestlab {

// Frontier with the feasibility restriction applied: eta0 = eta where the
// sample's cutoff is feasible, 0 elsewhere. Feasible-interval endpoints are
// inserted as extra samples so envelope bridges anchor exactly.
struct RestrictedSample {
    double s;
    double C;
    double eta;
    double eta0;
    bool feasible;
};

struct RestrictedFrontier {
    std::vector<RestrictedSample> samples;
    FrontierCurve curve;
    FeasibleSet feasible;
};

RestrictedFrontier restrict_eta(const FrontierCurve& curve, const FeasibleSet& feasible);

// Least concave majorant of the restricted frontier over [0, C_max] of the
// feasible samples. Vertices are input points; slopes strictly decrease.
class ConcaveEnvelope {
  public:
    struct Vertex {
        double C;
        double eta;
        double s;  // cutoff of the underlying sample; NaN for synthetic data
    };

    ConcaveEnvelope(std::vector<Vertex> vertices);

    const std::vector<Vertex>& vertices() const { return vertices_; }
    const std::vector<double>& slopes() const { return slopes_; }  // size = vertices-1

    double value(double C) const;  // linear interpolation; 0 beyond max_C
    double max_C() const { return vertices_.back().C; }

  private:
    std::vector<Vertex> vertices_;
    std::vector<double> slopes_;
};

// Upper concave hull of an arbitrary point cloud (monotone-chain sweep);
// near-collinear vertices are merged.
ConcaveEnvelope upper_envelope(std::vector<ConcaveEnvelope::Vertex> points);

// Hull of the feasible samples plus the origin (the origin is always
// attainable: s = 0 costs nothing and selects nothing).
ConcaveEnvelope concavify(const RestrictedFrontier& restricted);

// C* where the envelope's slope crosses lambda:
//   - lambda >= first slope        -> 0;
//   - lambda inside a slope jump   -> the jump's vertex;
//   - lambda equals a segment slope-> the segment's lower-C endpoint;
//   - lambda below every slope     -> the last vertex (max feasible cost).
double inverse_derivative(const ConcaveEnvelope& envelope, double lambda);

struct OptimalSolution {
    double C_star;
    double s_star;
    double payoff;  // eta(s*) - lambda * C*
    std::optional<std::pair<std::string, double>> mechanism_hint;  // (family, t)
};

struct SolveOptions {
    int grid = 4096;
    int refine_rounds = 2;      // extra sampling around hull vertices
    std::string family;         // "", "quota", or "blind": attach a mechanism hint
};

// Full pipeline: frontier -> restrict -> concavify -> inverse_derivative,
// with s* read off the winning vertex.
OptimalSolution solve(const ContestConfig& config, const TypeDistribution& F,
                      const CostFunction& c, const FeasibleSet& feasible,
                      const SolveOptions& options = {});

// Vertex polish for envelopes built from closed-form (C, eta) data rather
// than a contest: inserts samples into the gaps around each hull vertex
// (feasibility-gated) and rebuilds, `rounds` times.
ConcaveEnvelope refine_envelope(std::vector<ConcaveEnvelope::Vertex> points,
                                const std::function<double(double)>& eta_of_C,
                                const std::function<bool(double)>& feasible_C, int rounds);

}  // namespace contestlab
