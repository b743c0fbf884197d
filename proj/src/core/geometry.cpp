#include "core/geometry.hpp"

#include <boost/math/special_functions/gamma.hpp>
#include <boost/math/constants/constants.hpp>
#include <cmath>
#include <random>
#include <stdexcept>

namespace sct::geom {

namespace {
constexpr double kPi = boost::math::constants::pi<double>();
}

std::vector<double> HomogeneousPotential::gradV(const std::vector<double>& x) const {
    std::vector<double> g(n);
    for (int i = 0; i < n; ++i) g[i] = full.derivative(i).eval(x);
    return g;
}

std::vector<double> HomogeneousPotential::gradV2k(const std::vector<double>& y) const {
    std::vector<double> g(n);
    for (int i = 0; i < n; ++i) g[i] = v2k.derivative(i).eval(y);
    return g;
}

double HomogeneousPotential::hessian_norm(const std::vector<double>& x) const {
    // n stays small here; power iteration on the dense Hessian
    std::vector<std::vector<double>> H(n, std::vector<double>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) H[i][j] = full.derivative(i).derivative(j).eval(x);
    if (n == 1) return std::fabs(H[0][0]);
    std::vector<double> v(n, 1.0 / std::sqrt(double(n))), w(n);
    double lam = 0.0;
    for (int it = 0; it < 200; ++it) {
        for (int i = 0; i < n; ++i) {
            w[i] = 0.0;
            for (int j = 0; j < n; ++j) w[i] += H[i][j] * v[j];
        }
        double norm = 0.0;
        for (double t : w) norm += t * t;
        norm = std::sqrt(norm);
        if (norm == 0.0) return 0.0;
        for (int i = 0; i < n; ++i) v[i] = w[i] / norm;
        if (std::fabs(norm - lam) < 1e-13 * norm) return norm;
        lam = norm;
    }
    return lam;
}

HomogeneousPotential reference_potential() {
    HomogeneousPotential p;
    p.n = 1;
    p.k = 2;
    p.e_c = 0.0;
    p.x0 = {0.0};
    p.search_box = {{-1.6, 1.6}};
    p.full = Poly(1);
    p.full.add_term({4}, -1.0);
    p.full.add_term({6}, 1.0);
    p.v2k = Poly(1);
    p.v2k.add_term({4}, -1.0);
    return p;
}

namespace {

// direction samples on S^{n-1}: exhaustive for n=1, uniform grid for n=2,
// seeded gaussian directions for n>=3
std::vector<std::vector<double>> sphere_points(int n, int count, std::uint64_t seed) {
    std::vector<std::vector<double>> pts;
    if (n == 1) {
        pts.push_back({1.0});
        pts.push_back({-1.0});
        return pts;
    }
    if (n == 2) {
        for (int i = 0; i < count; ++i) {
            double th = 2.0 * kPi * i / count;
            pts.push_back({std::cos(th), std::sin(th)});
        }
        return pts;
    }
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int i = 0; i < count; ++i) {
        std::vector<double> v(n);
        double norm = 0.0;
        for (int j = 0; j < n; ++j) {
            v[j] = gauss(rng);
            norm += v[j] * v[j];
        }
        norm = std::sqrt(norm);
        for (int j = 0; j < n; ++j) v[j] /= norm;
        pts.push_back(std::move(v));
    }
    return pts;
}

} // namespace

AdmissibilityReport is_admissible(const HomogeneousPotential& p, double eps,
                                  int sphere_samples, std::uint64_t seed) {
    if (!(eps > 0)) throw std::invalid_argument("is_admissible: eps must be positive");
    AdmissibilityReport rep;

    // homogeneity of v2k by sampling: v2k(s x) = s^{2k} v2k(x)
    {
        std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
        std::uniform_real_distribution<double> uni(-1.0, 1.0), su(0.05, 2.0);
        bool ok = true;
        for (int it = 0; it < 100 && ok; ++it) {
            std::vector<double> x(p.n);
            for (auto& c : x) c = uni(rng);
            double s = su(rng);
            std::vector<double> sx(p.n);
            for (int i = 0; i < p.n; ++i) sx[i] = s * x[i];
            double lhs = p.V2k(sx);
            double rhs = std::pow(s, 2.0 * p.k) * p.V2k(x);
            if (std::fabs(lhs - rhs) > 1e-10 * (std::fabs(rhs) + 1e-300)) ok = false;
        }
        rep.homogeneous = ok;
        if (!ok) rep.detail += "v2k fails the homogeneity sampling; ";
    }

    // (a) definite negative: min of -V_2k over the sphere, with local refinement
    {
        auto pts = sphere_points(p.n, sphere_samples, seed);
        double best = 1e300;
        std::vector<double> argbest;
        for (auto& d : pts) {
            double v = -p.V2k(d);
            if (v < best) {
                best = v;
                argbest = d;
            }
        }
        if (p.n >= 2 && !argbest.empty()) {
            // crude local refinement around the sampled minimizer
            double step = 2.0 * kPi / sphere_samples;
            for (int it = 0; it < 40; ++it) {
                bool improved = false;
                for (int i = 0; i < p.n; ++i)
                    for (double sgn : {-1.0, 1.0}) {
                        auto cand = argbest;
                        cand[i] += sgn * step;
                        double norm = 0.0;
                        for (double c : cand) norm += c * c;
                        norm = std::sqrt(norm);
                        for (auto& c : cand) c /= norm;
                        double v = -p.V2k(cand);
                        if (v < best) {
                            best = v;
                            argbest = cand;
                            improved = true;
                        }
                    }
                if (!improved) step *= 0.5;
                if (step < 1e-12) break;
            }
        }
        rep.sphere_min = best;
        rep.definite_negative = best > 0.0;
        if (!rep.definite_negative) rep.detail += "V_2k is not definite negative; ";
    }

    // (b) compactness surrogate: V > E_c + eps on the search-box boundary
    {
        bool ok = true;
        int grid = 64;
        std::vector<int> idx(p.n, 0);
        // walk the boundary faces
        for (int face = 0; face < p.n && ok; ++face)
            for (double side : {0, 1}) {
                std::vector<double> x(p.n);
                int probes = (p.n == 1) ? 1 : grid;
                for (int t = 0; t < probes && ok; ++t) {
                    for (int i = 0; i < p.n; ++i) {
                        auto [lo, hi] = p.search_box[i];
                        if (i == face)
                            x[i] = side > 0.5 ? hi : lo;
                        else
                            x[i] = lo + (hi - lo) * (t + 0.5) / probes;
                    }
                    if (!(p.V(x) > p.e_c + eps)) ok = false;
                }
            }
        (void)idx;
        rep.compact_window = ok;
        if (!ok) rep.detail += "sublevel/boundary check failed on the search box; ";
    }

    // (c) x0 is the only critical point of V in the box with value in the window
    {
        bool ok = true;
        int grid = (p.n == 1) ? 4001 : 41;
        std::vector<double> x(p.n);
        std::vector<int> idx(p.n, 0);
        long total = 1;
        for (int i = 0; i < p.n; ++i) total *= grid;
        for (long c = 0; c < total && ok; ++c) {
            long rem = c;
            for (int i = 0; i < p.n; ++i) {
                idx[i] = rem % grid;
                rem /= grid;
                auto [lo, hi] = p.search_box[i];
                x[i] = lo + (hi - lo) * idx[i] / (grid - 1);
            }
            // Newton polish from the grid seed
            std::vector<double> y = x;
            for (int it = 0; it < 60; ++it) {
                auto g = p.gradV(y);
                double gn = 0.0;
                for (double t : g) gn += t * t;
                if (gn < 1e-26) break;
                if (p.n == 1) {
                    double h = p.full.derivative(0).derivative(0).eval(y);
                    if (std::fabs(h) < 1e-14) break;
                    y[0] -= g[0] / h;
                } else {
                    for (int i = 0; i < p.n; ++i) y[i] -= 0.05 * g[i];
                }
            }
            auto g = p.gradV(y);
            double gn = 0.0;
            for (double t : g) gn += t * t;
            bool inbox = true;
            for (int i = 0; i < p.n; ++i) {
                auto [lo, hi] = p.search_box[i];
                if (y[i] < lo - 1e-9 || y[i] > hi + 1e-9) inbox = false;
            }
            if (gn < 1e-18 && inbox) {
                double val = p.V(y);
                if (std::fabs(val - p.e_c) <= eps) {
                    double d = 0.0;
                    for (int i = 0; i < p.n; ++i)
                        d += (y[i] - p.x0[i]) * (y[i] - p.x0[i]);
                    if (std::sqrt(d) > 1e-5) {
                        ok = false;
                        rep.detail += "second critical point inside the energy window; ";
                    }
                }
            }
        }
        rep.unique_critical_point = ok;
    }
    return rep;
}

double sphere_surface(int n) {
    if (n < 1) throw std::invalid_argument("sphere_surface: n >= 1");
    if (n == 1) return 2.0;   // counting measure on {-1,+1}
    return 2.0 * std::pow(kPi, n / 2.0) / boost::math::tgamma(n / 2.0);
}

AngularFactor angular_factor(const HomogeneousPotential& p, double tol,
                             std::uint64_t seed, long mc_samples) {
    double expo = -double(p.n) / (2.0 * p.k);
    auto f = [&](const std::vector<double>& d) {
        return std::pow(std::fabs(p.V2k(d)), expo);
    };
    if (p.n == 1) return {f({1.0}) + f({-1.0}), 0.0};
    if (p.n == 2) {
        // periodic trapezoid, doubled until two resolutions agree
        int m = 64;
        double prev = 0.0;
        for (int it = 0; it < 16; ++it) {
            double acc = 0.0;
            for (int i = 0; i < m; ++i) {
                double th = 2.0 * kPi * i / m;
                acc += f({std::cos(th), std::sin(th)});
            }
            acc *= 2.0 * kPi / m;
            if (it > 0 && std::fabs(acc - prev) <= tol * std::fabs(acc))
                return {acc, std::fabs(acc - prev)};
            prev = acc;
            m *= 2;
        }
        throw std::runtime_error("angular_factor: angular quadrature did not converge");
    }
    // n >= 3: Monte Carlo with a reported standard-error estimate
    auto pts = sphere_points(p.n, int(mc_samples), seed);
    double s1 = 0.0, s2 = 0.0;
    for (auto& d : pts) {
        double v = f(d);
        s1 += v;
        s2 += v * v;
    }
    double mean = s1 / pts.size();
    double var = std::max(0.0, s2 / pts.size() - mean * mean);
    double surf = sphere_surface(p.n);
    double err = surf * std::sqrt(var / pts.size());
    return {surf * mean, err};
}

} // namespace sct::geom
