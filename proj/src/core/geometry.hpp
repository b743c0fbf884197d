#pragma once
#include "util/polynomial.hpp"
#include <cstdint>
#include <string>
#include <vector>

namespace sct::geom {

// Physical input: full confining potential V plus its homogeneous degree-2k
// part V_2k at the critical point.
struct HomogeneousPotential {
    int n = 1;            // spatial dimension
    int k = 2;            // half-degree, >= 2
    Poly full;            // V as a coefficient table over n variables
    Poly v2k;             // V_2k, homogeneous of degree 2k in (x - x0)
    double e_c = 0.0;     // critical energy
    std::vector<double> x0;             // critical point
    std::vector<std::pair<double, double>> search_box;   // per coordinate

    double V(const std::vector<double>& x) const { return full.eval(x); }
    double V2k(const std::vector<double>& y) const { return v2k.eval(y); }
    std::vector<double> gradV(const std::vector<double>& x) const;
    std::vector<double> gradV2k(const std::vector<double>& y) const;
    // operator norm of the Hessian of V at x (n is small; dense eigen bound)
    double hessian_norm(const std::vector<double>& x) const;
};

// the 1D reference potential V = -x^4 + x^6 with E_c = 0
HomogeneousPotential reference_potential();

struct AdmissibilityReport {
    bool definite_negative = false;     // (a)
    bool compact_window = false;        // (b) boundary check on the search box
    bool unique_critical_point = false; // (c)
    bool homogeneous = false;           // invariant check on v2k
    double sphere_min = 0.0;            // min of -V_2k on the unit sphere
    std::string detail;
    bool ok() const {
        return definite_negative && compact_window && unique_critical_point && homogeneous;
    }
};

AdmissibilityReport is_admissible(const HomogeneousPotential& p, double eps,
                                  int sphere_samples = 4096, std::uint64_t seed = 1);

// surface of the unit sphere in R^n: 2 pi^{n/2} / Gamma(n/2); S(S^0) = 2
double sphere_surface(int n);

struct AngularFactor {
    double value = 0.0;
    double error = 0.0;   // reported estimate (exact 0 for n=1)
};

// int_{S^{n-1}} |V_2k(eta)|^{-n/(2k)} d eta
AngularFactor angular_factor(const HomogeneousPotential& p, double tol = 1e-10,
                             std::uint64_t seed = 1, long mc_samples = 400000);

} // namespace sct::geom
