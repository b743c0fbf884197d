#pragma once
#include <vector>
#include <cmath>
#include <stdexcept>

namespace sct {

// Truncated univariate Taylor series sum_j c[j] eps^j, fixed length.
// Enough series arithmetic to push bump profiles and rational functions
// through to high derivative orders.
class Taylor {
public:
    explicit Taylor(int order) : c_(order + 1, 0.0) {}
    Taylor(int order, double c0) : c_(order + 1, 0.0) { c_[0] = c0; }

    static Taylor variable(int order, double x0) {
        Taylor t(order);
        t.c_[0] = x0;
        if (order >= 1) t.c_[1] = 1.0;
        return t;
    }

    int order() const { return int(c_.size()) - 1; }
    double& operator[](int j) { return c_[j]; }
    double operator[](int j) const { return c_[j]; }

    Taylor operator+(const Taylor& o) const {
        Taylor r(order());
        for (int j = 0; j <= order(); ++j) r.c_[j] = c_[j] + o.c_[j];
        return r;
    }
    Taylor operator-(const Taylor& o) const {
        Taylor r(order());
        for (int j = 0; j <= order(); ++j) r.c_[j] = c_[j] - o.c_[j];
        return r;
    }
    Taylor operator*(const Taylor& o) const {
        Taylor r(order());
        for (int i = 0; i <= order(); ++i) {
            if (c_[i] == 0.0) continue;
            for (int j = 0; i + j <= order(); ++j)
                r.c_[i + j] += c_[i] * o.c_[j];
        }
        return r;
    }
    Taylor operator*(double s) const {
        Taylor r(order());
        for (int j = 0; j <= order(); ++j) r.c_[j] = c_[j] * s;
        return r;
    }
    Taylor operator+(double s) const {
        Taylor r = *this;
        r.c_[0] += s;
        return r;
    }

    // r = a/b with b[0] != 0
    Taylor operator/(const Taylor& b) const {
        if (b.c_[0] == 0.0) throw std::domain_error("taylor division by series with zero constant term");
        Taylor r(order());
        for (int j = 0; j <= order(); ++j) {
            double acc = c_[j];
            for (int i = 1; i <= j; ++i) acc -= b.c_[i] * r.c_[j - i];
            r.c_[j] = acc / b.c_[0];
        }
        return r;
    }

    // exp of the series
    Taylor exp_() const {
        Taylor r(order());
        r.c_[0] = std::exp(c_[0]);
        for (int j = 1; j <= order(); ++j) {
            double acc = 0.0;
            for (int i = 1; i <= j; ++i) acc += i * c_[i] * r.c_[j - i];
            r.c_[j] = acc / j;
        }
        return r;
    }

    // j-th derivative value at the expansion point
    double deriv(int j) const {
        double f = 1.0;
        for (int i = 2; i <= j; ++i) f *= i;
        return c_[j] * f;
    }

private:
    std::vector<double> c_;
};

} // namespace sct
