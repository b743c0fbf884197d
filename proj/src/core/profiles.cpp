#include "core/profiles.hpp"
#include "util/quadrature.hpp"

#include <boost/math/special_functions/digamma.hpp>
#include <boost/math/special_functions/polygamma.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <boost/math/constants/constants.hpp>
#include <cmath>
#include <stdexcept>

namespace sct::mellin {

Profile::Profile(double R, double beta) : R_(R), beta_(beta) {
    if (R <= 0) throw std::invalid_argument("profile support radius must be positive");
}

double Profile::operator()(double x) const {
    double a = std::fabs(x);
    if (a >= R_) return 0.0;
    double x2 = x * x;
    return (1.0 + beta_ * x) * std::exp(-x2 / (R_ * R_ - x2));
}

Taylor Profile::local(double x0, int order) const {
    // g(x0+e) = -(x0+e)^2 / (R^2 - (x0+e)^2), f = (1 + beta(x0+e)) exp(g)
    Taylor x = Taylor::variable(order, x0);
    Taylor x2 = x * x;
    Taylor num = x2 * (-1.0);
    Taylor den = x2 * (-1.0) + (R_ * R_);
    Taylor f = (num / den).exp_();
    Taylor lin(order);
    lin[0] = 1.0 + beta_ * x0;
    if (order >= 1) lin[1] = beta_;
    return lin * f;
}

double Profile::deriv(int r, double x) const {
    double a = std::fabs(x);
    if (a >= R_) return 0.0;
    if (r == 0) return (*this)(x);
    return local(x, r).deriv(r);
}

const std::vector<double>& Profile::taylor0(int N) const {
    if (int(t0_.size()) < N + 1) {
        Taylor t = local(0.0, N);
        t0_.resize(N + 1);
        for (int j = 0; j <= N; ++j) t0_[j] = t[j];
    }
    return t0_;
}

// ---------------- ProfileMellin ----------------

ProfileMellin::ProfileMellin(const Profile& w, int max_head, double quad_tol)
    : w_(w), tol_(quad_tol) {
    t_ = w.taylor0(max_head + 8);
    Q0_ = std::min(1.0, 0.5 * w.support());
}

double ProfileMellin::analytic_parts(double om, int J) const {
    // int_0^{Q0} q^{om-1} (w - head_J) + int_{Q0}^{supp} q^{om-1} w
    double qsw = 0.35 * w_.support();        // switch to the Taylor tail near 0
    if (qsw > 0.75 * Q0_) qsw = 0.75 * Q0_;
    int Jmax = J + 8;
    auto rem = [&](double q) {
        if (q < qsw) {
            // (w - head_J)(q) q^{om-1} = [sum_{j>J} w_j q^{j-J-1}] q^{om+J}
            double acc = 0.0;
            for (int j = Jmax; j >= J + 1; --j) acc = acc * q + t_[j];
            return acc * std::pow(q, om + J);
        }
        double head = 0.0;
        for (int j = J; j >= 0; --j) head = head * q + t_[j];
        return (w_(q) - head) * std::pow(q, om - 1.0);
    };
    double i1 = integrate(rem, 0.0, Q0_, tol_).value;
    double i2 = integrate([&](double q) { return std::pow(q, om - 1.0) * w_(q); },
                          Q0_, w_.support(), tol_).value;
    return i1 + i2;
}

double ProfileMellin::value(double om) const {
    if (om > 0.25) {
        double i1 = integrate([&](double q) { return std::pow(q, om - 1.0) * w_(q); },
                              0.0, Q0_, tol_).value;
        double i2 = integrate([&](double q) { return std::pow(q, om - 1.0) * w_(q); },
                              Q0_, w_.support(), tol_).value;
        return i1 + i2;
    }
    int J = int(std::floor(-om)) + 1;
    if (J + 8 >= int(t_.size()))
        throw std::domain_error("ProfileMellin: continuation depth exceeds prepared heads");
    double s = analytic_parts(om, J);
    for (int j = 0; j <= J; ++j) s += t_[j] * std::pow(Q0_, om + j) / (om + j);
    return s;
}

LaurentJet ProfileMellin::jet(double om0, double slope) const {
    double omr = std::round(om0);
    if (om0 > 0.25 || std::fabs(om0 - omr) > 1e-12 || omr > 0.25) {
        // analytic point: value + first derivative by central difference
        double h = 1e-5;
        double v = value(om0);
        double dv = (value(om0 + h) - value(om0 - h)) / (2 * h);
        return LaurentJet::analytic(v, slope * dv);
    }
    int j = int(-omr);
    if (j + 9 >= int(t_.size()))
        throw std::domain_error("ProfileMellin: continuation depth exceeds prepared heads");
    // pole: M(om) = w_j/(om+j) + FP + FP'(om+j) + ...
    double fp = analytic_parts(-double(j), j);
    fp += t_[j] * std::log(Q0_);
    for (int i = 0; i < j; ++i) fp += t_[i] * std::pow(Q0_, double(i - j)) / double(i - j);
    // first derivative of the regular part: log-weighted analytic pieces (exact)
    double qsw = 0.35 * w_.support();
    if (qsw > 0.75 * Q0_) qsw = 0.75 * Q0_;
    int Jmax = j + 8;
    auto remlog = [&](double q) {
        double lg = std::log(q);
        if (q < qsw) {
            double acc = 0.0;
            for (int i = Jmax; i >= j + 1; --i) acc = acc * q + t_[i];
            return acc * lg;   // q^{om-1} (w - head) = acc at om = -j
        }
        double head = 0.0;
        for (int i = j; i >= 0; --i) head = head * q + t_[i];
        return (w_(q) - head) * std::pow(q, -double(j) - 1.0) * lg;
    };
    double a1 = integrate(remlog, 0.0, Q0_, tol_).value;
    a1 += integrate([&](double q) { return std::pow(q, -double(j) - 1.0) * std::log(q) * w_(q); },
                    Q0_, w_.support(), tol_).value;
    a1 += t_[j] * 0.5 * std::log(Q0_) * std::log(Q0_);
    for (int i = 0; i < j; ++i) {
        double d = double(i - j);
        a1 += t_[i] * std::pow(Q0_, d) * (std::log(Q0_) / d - 1.0 / (d * d));
    }
    LaurentJet out;
    out.set(-1, t_[j] / slope);
    out.set(0, fp);
    out.set(1, a1 * slope);
    return out;
}

// ---------------- Gamma jets ----------------

namespace {
// Taylor of Gamma(1+h) = 1 - g h + a2 h^2 - a3 h^3 around h=0 (exact constants)
void gamma1p_series(double out[4]) {
    const double g = 0.57721566490153286061;
    const double z2 = boost::math::constants::pi<double>() * boost::math::constants::pi<double>() / 6.0;
    const double z3 = 1.2020569031595942854;
    out[0] = 1.0;
    out[1] = -g;
    out[2] = g * g / 2.0 + z2 / 2.0;
    out[3] = -(g * g * g + 3.0 * g * z2 + 2.0 * z3) / 6.0;
}
// Taylor of prod_{i=1}^{j} 1/(1 - h/i) = exp(sum_m H_j^{(m)} h^m / m)
void invprod_series(int j, double out[4]) {
    double H1 = 0, H2 = 0, H3 = 0;
    for (int i = 1; i <= j; ++i) {
        H1 += 1.0 / i;
        H2 += 1.0 / (double(i) * i);
        H3 += 1.0 / (double(i) * i * i);
    }
    // log F = H1 h + H2 h^2/2 + H3 h^3/3
    out[0] = 1.0;
    out[1] = H1;
    out[2] = H1 * H1 / 2.0 + H2 / 2.0;
    out[3] = H1 * H1 * H1 / 6.0 + H1 * H2 / 2.0 + H3 / 3.0;
}
void series_mul(const double a[4], const double b[4], double out[4]) {
    for (int i = 0; i < 4; ++i) {
        out[i] = 0;
        for (int p = 0; p <= i; ++p) out[i] += a[p] * b[i - p];
    }
}
void series_recip(const double a[4], double out[4]) {
    out[0] = 1.0 / a[0];
    for (int i = 1; i < 4; ++i) {
        double acc = 0.0;
        for (int p = 1; p <= i; ++p) acc += a[p] * out[i - p];
        out[i] = -acc / a[0];
    }
}
} // namespace

LaurentJet gamma_jet(double x0, double slope) {
    double xr = std::round(x0);
    if (x0 > 0.0 || std::fabs(x0 - xr) > 1e-12) {
        double g = boost::math::tgamma(x0);
        double psi = boost::math::digamma(x0);
        double psi1 = boost::math::polygamma(1, x0);
        return LaurentJet::analytic(g, slope * g * psi,
                                    0.5 * slope * slope * g * (psi * psi + psi1));
    }
    int j = int(-xr);
    // Gamma(-j+h) = [Gamma(1+h) * prod(1-h/i)^{-1}] * (-1)^j / (j! h)
    double g1[4], ip[4], s[4];
    gamma1p_series(g1);
    invprod_series(j, ip);
    series_mul(g1, ip, s);
    double fact = 1.0;
    for (int i = 2; i <= j; ++i) fact *= i;
    double pref = ((j % 2) ? -1.0 : 1.0) / fact;
    LaurentJet out;
    // pref * (s0/h + s1 + s2 h + s3 h^2), h = slope*eps
    out.set(-1, pref * s[0] / slope);
    out.set(0, pref * s[1]);
    out.set(1, pref * s[2] * slope);
    out.set(2, pref * s[3] * slope * slope);
    return out;
}

LaurentJet inv_gamma_jet(double x0, double slope) {
    double xr = std::round(x0);
    if (x0 > 0.0 || std::fabs(x0 - xr) > 1e-12) {
        double g = 1.0 / boost::math::tgamma(x0);
        double psi = boost::math::digamma(x0);
        double psi1 = boost::math::polygamma(1, x0);
        return LaurentJet::analytic(g, -slope * psi * g,
                                    0.5 * slope * slope * g * (psi * psi - psi1));
    }
    int j = int(-xr);
    // 1/Gamma(-j+h) = (-1)^j j! h * prod(1-h/i) / Gamma(1+h)
    double g1[4], rg[4], pr[4], s[4];
    gamma1p_series(g1);
    series_recip(g1, rg);
    // prod_{i=1}^{j}(1 - h/i): log = -sum H^{(m)} h^m / m
    double H1 = 0, H2 = 0, H3 = 0;
    for (int i = 1; i <= j; ++i) {
        H1 += 1.0 / i;
        H2 += 1.0 / (double(i) * i);
        H3 += 1.0 / (double(i) * i * i);
    }
    pr[0] = 1.0;
    pr[1] = -H1;
    pr[2] = H1 * H1 / 2.0 - H2 / 2.0;
    pr[3] = -(H1 * H1 * H1 / 6.0 - H1 * H2 / 2.0 + H3 / 3.0);
    series_mul(pr, rg, s);
    double fact = 1.0;
    for (int i = 2; i <= j; ++i) fact *= i;
    double pref = ((j % 2) ? -1.0 : 1.0) * fact;
    LaurentJet out;
    // pref * h * (s0 + s1 h + s2 h^2)
    out.set(1, pref * s[0] * slope);
    out.set(2, pref * s[1] * slope * slope);
    return out;
}

} // namespace sct::mellin
