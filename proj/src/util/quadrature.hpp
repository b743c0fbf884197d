#pragma once
#include <functional>
#include <stdexcept>
#include <string>

namespace sct {

struct QuadResult {
    double value = 0.0;
    double error = 0.0;   // estimated absolute error
};

// Adaptive quadrature wrappers. Finite intervals use tanh-sinh (handles
// algebraic endpoint singularities); [a, inf) maps the tail through s = 1/t.
QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     double tol = 1e-12);

// integral over [a, inf); integrand must decay at least like s^{-1-delta}
QuadResult integrate_to_inf(const std::function<double(double)>& f, double a,
                            double tol = 1e-12);

// convenience: value or throw if the reported error exceeds `hard`
double integrate_checked(const std::function<double(double)>& f, double a, double b,
                         double tol, double hard, const char* what);

} // namespace sct
