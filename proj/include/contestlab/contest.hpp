#pragma once

#include <functional>
#include <string>
#include <vector>

namespace contestlab {

// n agents compete for m identical prizes; lambda weighs the designer's
// aversion to effort cost in the objective eta - lambda * C.
struct ContestConfig {
    int n = 2;
    int m = 1;
    double lambda = 1.0;

    void validate() const;  // throws ValidationError unless n >= 2, 0 < m < n
};

// Component k (1-based, k = 1..n-1) is the total expected prize mass handed
// to the high-effort group when exactly k agents exert high effort. The
// boundary components are implicit: at(0) = 0, at(n) = m.
class AllocationVector {
  public:
    AllocationVector(int n, int m, std::vector<double> v);

    int n() const { return n_; }
    int m() const { return m_; }
    int size() const { return n_ - 1; }
    const std::vector<double>& components() const { return v_; }

    double at(int k) const;  // k in [0, n]

    // True when feasible without prize disposal or oversupply:
    // max(0, m-(n-k)) <= v_k <= min(k, m) for every k.
    bool ex_post_feasible(double tol = 1e-9) const;
    double lower_bound(int k) const;  // max(0, m-(n-k))
    double upper_bound(int k) const;  // min(k, m)

  private:
    int n_;
    int m_;
    std::vector<double> v_;
};

// Extreme and benchmark mechanisms.
AllocationVector standard_vector(const ContestConfig& config);  // (1,2,...,m,m,...,m)
AllocationVector reversed_vector(const ContestConfig& config);  // (0,...,0,1,...,m-1)
AllocationVector random_vector(const ContestConfig& config);    // (m/n, 2m/n, ...)

// Continuous one-parameter path of mechanisms; t=1 is always the standard
// contest and t=0 is either the reversed contest or the uniform lottery.
struct MechanismFamily {
    std::string name;
    std::string low_endpoint;   // "reversed" or "random"
    std::function<AllocationVector(double)> at;
};

// Awards the prize to the high-effort group with probability t, uniformly
// within the group: v(t) = (mt, mt, ..., mt). Requires m = 1 unless relax is
// set (the relaxed variant drops ex-post feasibility for small groups).
MechanismFamily quota_family(const ContestConfig& config, bool relax = false);

// Standard contest run on a noisy monitor that records high effort as low
// with probability 1-t; t=0 collapses to the uniform lottery.
MechanismFamily blind_eye_family(const ContestConfig& config);

// Componentwise interpolation between the reversed and standard contests.
MechanismFamily interpolated_family(const ContestConfig& config);

}  // namespace contestlab
