#pragma once
#include <functional>
#include <vector>
#include <stdexcept>

namespace sct {

// Adaptive Dormand-Prince 5(4) integrator on std::vector<double> state.
// Small, deterministic, no dependencies; tolerances are per-call.
struct OdeOptions {
    double rtol = 1e-10;
    double atol = 1e-12;
    double h_init = 1e-3;
    double h_min = 1e-14;
    long max_steps = 2000000;
};

using OdeRhs = std::function<void(double t, const std::vector<double>& y,
                                  std::vector<double>& dydt)>;

// integrates y' = f(t,y) from t0 to t1 (t1 may be < t0); returns final state.
std::vector<double> ode_integrate(const OdeRhs& f, std::vector<double> y,
                                  double t0, double t1, const OdeOptions& opt = {});

// same, but invokes `watch(t, y)` after every accepted step (and at t0).
std::vector<double> ode_integrate_watch(
    const OdeRhs& f, std::vector<double> y, double t0, double t1,
    const OdeOptions& opt,
    const std::function<void(double, const std::vector<double>&)>& watch);

} // namespace sct
