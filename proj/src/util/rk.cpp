#include "util/rk.hpp"
#include <cmath>
#include <algorithm>

namespace sct {

namespace {
// Dormand-Prince coefficients
const double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
const double a21 = 1.0 / 5;
const double a31 = 3.0 / 40, a32 = 9.0 / 40;
const double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
const double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561, a54 = -212.0 / 729;
const double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
             a65 = -5103.0 / 18656;
const double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784,
             b6 = 11.0 / 84;
// embedded 4th order
const double e1 = 5179.0 / 57600, e3 = 7571.0 / 16695, e4 = 393.0 / 640, e5 = -92097.0 / 339200,
             e6 = 187.0 / 2100, e7 = 1.0 / 40;
} // namespace

std::vector<double> ode_integrate_watch(
    const OdeRhs& f, std::vector<double> y, double t0, double t1,
    const OdeOptions& opt,
    const std::function<void(double, const std::vector<double>&)>& watch) {
    const size_t n = y.size();
    double dir = (t1 >= t0) ? 1.0 : -1.0;
    double t = t0;
    double h = std::min(std::fabs(opt.h_init), std::fabs(t1 - t0)) * dir;
    if (h == 0.0) return y;

    std::vector<double> k1(n), k2(n), k3(n), k4(n), k5(n), k6(n), k7(n), yt(n), y5(n);
    if (watch) watch(t, y);
    f(t, y, k1);

    for (long step = 0; step < opt.max_steps; ++step) {
        if ((t - t1) * dir >= 0.0) return y;
        if ((t + h - t1) * dir > 0.0) h = t1 - t;

        for (size_t i = 0; i < n; ++i) yt[i] = y[i] + h * a21 * k1[i];
        f(t + c2 * h, yt, k2);
        for (size_t i = 0; i < n; ++i) yt[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
        f(t + c3 * h, yt, k3);
        for (size_t i = 0; i < n; ++i) yt[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
        f(t + c4 * h, yt, k4);
        for (size_t i = 0; i < n; ++i)
            yt[i] = y[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
        f(t + c5 * h, yt, k5);
        for (size_t i = 0; i < n; ++i)
            yt[i] = y[i] + h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] + a65 * k5[i]);
        f(t + h, yt, k6);
        for (size_t i = 0; i < n; ++i)
            y5[i] = y[i] + h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] + b6 * k6[i]);
        f(t + h, y5, k7);

        double errnorm = 0.0;
        for (size_t i = 0; i < n; ++i) {
            double y4 = y[i] + h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] +
                                    e6 * k6[i] + e7 * k7[i]);
            double sc = opt.atol + opt.rtol * std::max(std::fabs(y[i]), std::fabs(y5[i]));
            double d = (y5[i] - y4) / sc;
            errnorm += d * d;
        }
        errnorm = std::sqrt(errnorm / double(n));

        if (errnorm <= 1.0) {
            t += h;
            y = y5;
            k1 = k7;   // FSAL
            if (watch) watch(t, y);
        }
        double fac = 0.9 * std::pow(std::max(errnorm, 1e-30), -0.2);
        fac = std::clamp(fac, 0.2, 5.0);
        h *= fac;
        if (std::fabs(h) < opt.h_min)
            throw std::runtime_error("ode_integrate: step size underflow (stiff or blow-up trajectory)");
    }
    throw std::runtime_error("ode_integrate: max step count exceeded");
}

std::vector<double> ode_integrate(const OdeRhs& f, std::vector<double> y,
                                  double t0, double t1, const OdeOptions& opt) {
    return ode_integrate_watch(f, std::move(y), t0, t1, opt, nullptr);
}

} // namespace sct
