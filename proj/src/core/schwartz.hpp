#pragma once
#include "core/mellin.hpp"
#include <memory>
#include <vector>

namespace sct::spec {

// Cached cosine/sine transform of t^M * bump(t/T) over (0, T):
//   F(tau) = 2 int_0^T t^M exp(-1/(1-(t/T)^2)) trig(tau t) dt
// trig = cos for even M (F even), sin for odd M (F odd). Values are cached on
// a uniform grid with cubic interpolation; beyond tau_max an integration-by-
// parts decay bound certifies |F| below threshold.
class BumpTransform {
public:
    BumpTransform(double T, int M, double tau_max = 0.0, double dtau = 0.05);

    double operator()(double tau) const;
    double T() const { return T_; }
    int moment_kill() const { return M_; }
    double tau_max() const { return tau_max_; }
    // |F(tau)| <= bound for |tau| >= tau_max
    double far_bound() const { return far_bound_; }
    double hat(double t) const;          // the time-side profile t^M bump(t/T)

private:
    double T_;
    int M_;
    double tau_max_, dtau_;
    std::vector<double> grid_;
    double far_bound_ = 0.0;
    double direct(double tau) const;
};

// Spectral test-function pair: phi_hat(t) = exp(-1/(1-(t/T)^2)) on (-T,T),
// phi = its inverse Fourier transform (real, even). Optional shift c models a
// nonvanishing subprincipal symbol: represents t -> phi(t + c).
class SchwartzPair {
public:
    explicit SchwartzPair(double T);

    double phi(double x) const;       // includes the shift
    double phi_hat(double t) const;   // modulus of the shifted hat equals the bump
    double T() const { return T_; }
    double shift() const { return c_; }
    double phi_tail_end() const;      // |phi| negligible beyond (for quadratures)
    double decay_bound(double x) const;   // certified |phi(x)| bound, large |x|

    SchwartzPair shifted(double c) const;

private:
    double T_;
    double c_ = 0.0;
    std::shared_ptr<const BumpTransform> F_;
};

// Time side of the bump model amplitude: ahat = transform of t^M bump, with
// numeric Mellin transforms on both half lines.
class BumpSide : public mellin::MellinSide {
public:
    BumpSide(double T, int M);
    double ahat(double tau) const override;
    double M(char side, double z) const override;
    double tail_end() const override;
    int moment_kill() const override { return F_.moment_kill(); }
    double time_support() const { return F_.T(); }
    double hat(double t) const { return F_.hat(t); }   // the explicit t-profile

private:
    BumpTransform F_;
};

} // namespace sct::spec
