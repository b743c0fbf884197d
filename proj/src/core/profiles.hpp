#pragma once
#include "util/taylor.hpp"
#include "util/laurent.hpp"
#include <vector>
#include <memory>

namespace sct::mellin {

// Smooth compactly supported radial profile
//   f(x) = (1 + beta x) * exp(-x^2 / (R^2 - x^2))   for |x| < R, else 0.
// beta = 0 gives the even bump used by the model amplitudes; beta != 0 turns on
// odd Taylor data at 0 (exercises every pole of the catalog in tests).
class Profile {
public:
    explicit Profile(double R = 1.0, double beta = 0.0);

    double operator()(double x) const;
    double support() const { return R_; }

    // f^{(r)}(x) for small r, via a local Taylor expansion
    double deriv(int r, double x) const;

    // Taylor coefficients f^{(j)}(0)/j! for j = 0..N
    const std::vector<double>& taylor0(int N) const;

    // local Taylor series of f at x0 up to `order`
    Taylor local(double x0, int order) const;

private:
    double R_, beta_;
    mutable std::vector<double> t0_;
};

// Mellin transform of a profile, M[w](om) = int_0^inf q^{om-1} w(q) dq, with
// meromorphic continuation through the Taylor-head subtraction. Simple poles
// at om = -j with residue w_j = w^{(j)}(0)/j!.
class ProfileMellin {
public:
    ProfileMellin(const Profile& w, int max_head, double quad_tol);

    double value(double om) const;

    // Laurent jet of om -> M[w](om0 + slope*eps) at eps = 0.
    LaurentJet jet(double om0, double slope) const;

    double taylor_coeff(int j) const { return t_[j]; }

private:
    const Profile& w_;
    std::vector<double> t_;
    double tol_;
    double Q0_ = 1.0;
    double analytic_parts(double om, int J) const;   // head-subtracted integrals
};

// --- Gamma-function Laurent jets (exact coefficients) ---

// jet of Gamma(x0 + slope*eps); x0 may be a nonpositive integer (pole)
LaurentJet gamma_jet(double x0, double slope);
// jet of 1/Gamma(x0 + slope*eps); zero of order 1 at nonpositive integers
LaurentJet inv_gamma_jet(double x0, double slope);

} // namespace sct::mellin
