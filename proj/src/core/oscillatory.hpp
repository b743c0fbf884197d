#pragma once
#include "core/mellin.hpp"
#include "util/rational.hpp"
#include <string>
#include <vector>

namespace sct::osc {

// Model amplitude A(t,r,q) = a(t) b(r,q) with b = u(r) w(q); the polar weights
// r^{n-1} q^{n-1} stay explicit in the integrals, never folded into b.
struct ModelAmplitude {
    int n = 1, k = 2;
    mellin::AmplitudeData data;
};

struct AmplitudeParams {
    double r_support = 1.0;
    double q_support = 1.0;
    double odd_r = 0.0;       // odd Taylor data at 0 (tests of the full catalog)
    double odd_q = 0.0;
    int moment_kill = 0;      // vanishing full moments of ahat: kills the
                              // regular-manifold ladder below z_min
    double time_support = 1.0;   // bump profile only
    double b00_scale = 1.0;
};

// profile in {"bump", "gaussian-windowed"}
ModelAmplitude amplitude_factory(const std::string& profile, int n, int k,
                                 const AmplitudeParams& params);

// smallest moment_kill that removes every integer ladder term below z_min
int required_moment_kill(int n, int k);

// Brute-force oracle for the reduced integral
//   J(lambda) = int int ahat(lambda (r^2 - q^{2k})) b(r,q) r^{n-1} q^{n-1} dr dq
// by quadrature concentrated near the manifold r = q^k (substitution
// tau = lambda (r^2 - q^{2k}) along r for fixed q).
struct OracleValue {
    double value = 0.0;
    double error = 0.0;
};
OracleValue oracle_eval(const ModelAmplitude& amp, double lambda, double tol = 1e-11);

// direct 3D evaluation of the pre-reduction oscillatory integral (slow; used
// as an independent consistency path at moderate lambda)
double oracle_eval_3d(const ModelAmplitude& amp, double lambda, double tol = 1e-8);

// one term c * lambda^{-a} * log(lambda)^m
struct SeriesTerm {
    Rational exponent;
    int log_power = 0;   // 0 or 1
    double coefficient = 0.0;
};

struct AsymptoticSeries {
    std::vector<SeriesTerm> terms;   // exponents nondecreasing, all >= z_min
    double valid_from = 0.0;
    double eval(double lambda) const;
};

// series from the residue engine at the first `order` catalog poles
AsymptoticSeries build_expansion(const ModelAmplitude& amp, int order,
                                 double tol = 1e-11);

// regular-manifold (co-area) ladder below z_min: terms c_m lambda^{-m} for
// integer 1 <= m < z_min, with c_m = mu_{m-1}/(m-1)! * g_{m-1} pairing the
// full-line moments of ahat with transverse data along r = q^k. These vanish
// when moment_kill >= ceil(z_min) - 1.
std::vector<SeriesTerm> edge_ladder(const ModelAmplitude& amp, double tol = 1e-10);

struct TailFit {
    double exponent = 0.0;     // a in c lambda^{-a} (log lambda)^m
    double coefficient = 0.0;  // c
    double residual = 0.0;     // rms residual on the log scale
};

// least-squares fit of value ~ c lambda^{-a} (with_log: * log lambda)
TailFit fit_tail(const std::vector<std::pair<double, double>>& samples, bool with_log);

} // namespace sct::osc
