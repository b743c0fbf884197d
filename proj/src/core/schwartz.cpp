#include "core/schwartz.hpp"
#include "util/quadrature.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/math/quadrature/gauss.hpp>
#include <cmath>
#include <stdexcept>

namespace sct::spec {

namespace {
constexpr double kPi = boost::math::constants::pi<double>();

double bump01(double u) {   // exp(-1/(1-u^2)) on (-1,1)
    double a = std::fabs(u);
    if (a >= 1.0) return 0.0;
    return std::exp(-1.0 / (1.0 - u * u));
}
} // namespace

BumpTransform::BumpTransform(double T, int M, double tau_max, double dtau)
    : T_(T), M_(M), dtau_(dtau) {
    if (T <= 0) throw std::invalid_argument("BumpTransform: T must be positive");
    // the transform lives on the scale 1/T; the grid spacing follows suit
    dtau_ = std::min(dtau, 0.02 / T);
    tau_max_ = (tau_max > 0) ? tau_max : 60.0 / T;
    size_t npts = size_t(tau_max_ / dtau_) + 2;
    grid_.resize(npts);
    for (size_t i = 0; i < npts; ++i) grid_[i] = direct(i * dtau_);
    // integration-by-parts bound: |F(tau)| <= ||d^4/dt^4 (t^M bump)||_L1 / tau^4
    double l1 = integrate([&](double t) {
        // 4th derivative by a compact finite-difference stencil; only a bound
        double h = 1e-3 * T_;
        auto f = [&](double s) { return hat(s); };
        double d4 = (f(t + 2 * h) - 4 * f(t + h) + 6 * f(t) - 4 * f(t - h) + f(t - 2 * h)) /
                    (h * h * h * h);
        return std::fabs(d4);
    }, -T_, T_, 1e-8).value;
    far_bound_ = 1.05 * l1 / std::pow(tau_max_, 4.0);
}

double BumpTransform::hat(double t) const {
    return std::pow(t, M_) * bump01(t / T_);
}

double BumpTransform::direct(double tau) const {
    static const auto& gl = boost::math::quadrature::gauss<double, 128>::abscissa();
    static const auto& glw = boost::math::quadrature::gauss<double, 128>::weights();
    bool even = (M_ % 2 == 0);
    double acc = 0.0;
    // gauss<> exposes the positive half nodes for [-1,1]; map to [0,T]
    for (size_t i = 0; i < gl.size(); ++i) {
        for (double sgn : {-1.0, 1.0}) {
            double t = 0.5 * T_ * (1.0 + sgn * gl[i]);
            double w = 0.5 * T_ * glw[i];
            double trig = even ? std::cos(tau * t) : std::sin(tau * t);
            acc += w * std::pow(t, M_) * bump01(t / T_) * trig;
            if (gl[i] == 0.0) break;
        }
    }
    return 2.0 * acc;
}

double BumpTransform::operator()(double tau) const {
    double a = std::fabs(tau);
    double sgn = (M_ % 2 == 1 && tau < 0) ? -1.0 : 1.0;
    if (a >= tau_max_) return 0.0;   // below far_bound_ by construction
    size_t i = size_t(a / dtau_);
    if (i + 2 >= grid_.size()) return 0.0;
    double x = a / dtau_ - i;
    // cubic interpolation through four neighbouring samples
    double p0 = grid_[i == 0 ? 0 : i - 1], p1 = grid_[i], p2 = grid_[i + 1],
           p3 = grid_[i + 2];
    if (i == 0) p0 = (M_ % 2 == 0) ? grid_[1] : -grid_[1];
    double a0 = p1;
    double a1 = 0.5 * (p2 - p0);
    double a2 = p0 - 2.5 * p1 + 2.0 * p2 - 0.5 * p3;
    double a3 = 0.5 * (p3 - p0) + 1.5 * (p1 - p2);
    return sgn * (a0 + x * (a1 + x * (a2 + x * a3)));
}

// ---------------- SchwartzPair ----------------

SchwartzPair::SchwartzPair(double T)
    : T_(T), F_(std::make_shared<BumpTransform>(T, 0)) {}

double SchwartzPair::phi(double x) const { return (*F_)(x + c_) / (2.0 * kPi); }

double SchwartzPair::phi_hat(double t) const { return bump01(t / T_); }

double SchwartzPair::phi_tail_end() const { return F_->tau_max(); }

double SchwartzPair::decay_bound(double x) const {
    double a = std::max(std::fabs(x + c_), 1.0);
    // |phi(x)| <= ||phi_hat''''||_L1 / (2 pi x^4); far_bound = ||.||_L1 / tau_max^4
    double r = F_->tau_max() / a;
    return F_->far_bound() * r * r * r * r / (2.0 * kPi);
}

SchwartzPair SchwartzPair::shifted(double c) const {
    SchwartzPair out = *this;
    out.c_ = c_ + c;
    return out;
}

// ---------------- BumpSide ----------------

BumpSide::BumpSide(double T, int M) : F_(T, M) {}

double BumpSide::ahat(double tau) const { return F_(tau); }

double BumpSide::tail_end() const { return F_.tau_max(); }

double BumpSide::M(char side, double z) const {
    double sgn = (side == '+') ? 1.0 : -1.0;
    auto f = [&](double t) { return F_(sgn * t); };
    return mellin::mellin_transform(f, {z, 0.0}, F_.tau_max(), 1e-11).real();
}

} // namespace sct::spec
