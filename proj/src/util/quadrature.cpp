#include "util/quadrature.hpp"

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>

namespace sct {

QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     double tol) {
    if (a == b) return {0.0, 0.0};
    boost::math::quadrature::tanh_sinh<double> ts(15);
    double err = 0.0, l1 = 0.0;
    double v = ts.integrate(f, a, b, tol, &err, &l1);
    return {v, err * l1};   // boost reports relative-ish error; scale by L1 norm
}

QuadResult integrate_to_inf(const std::function<double(double)>& f, double a,
                            double tol) {
    // split at max(a,1)+1 so the 1/t map sees a decaying integrand
    double cut = std::max(a, 1.0) + 1.0;
    QuadResult head = integrate(f, a, cut, tol);
    auto tail = [&](double t) {   // s = cut/t, t in (0,1]
        double s = cut / t;
        return f(s) * cut / (t * t);
    };
    QuadResult rest = integrate(tail, 0.0, 1.0, tol);
    return {head.value + rest.value, head.error + rest.error};
}

double integrate_checked(const std::function<double(double)>& f, double a, double b,
                         double tol, double hard, const char* what) {
    QuadResult r = integrate(f, a, b, tol);
    if (!(r.error <= hard))
        throw std::runtime_error(std::string("quadrature did not converge: ") + what);
    return r.value;
}

} // namespace sct
