#pragma once
#include <array>
#include <stdexcept>

namespace sct {

// Truncated Laurent expansion sum_{m=-2}^{2} c[m+2] eps^m around a pole.
// Pole order 2 is the maximum that occurs in the meromorphic continuation
// (double roots of B_l / ladder collisions); products that would exceed it
// are rejected loudly.
struct LaurentJet {
    std::array<double, 5> c{0, 0, 0, 0, 0};

    static LaurentJet constant(double v) {
        LaurentJet j;
        j.c[2] = v;
        return j;
    }
    static LaurentJet analytic(double v, double dv, double d2v_half = 0.0) {
        LaurentJet j;
        j.c[2] = v;
        j.c[3] = dv;
        j.c[4] = d2v_half;
        return j;
    }

    double at(int m) const { return c[m + 2]; }
    void set(int m, double v) { c[m + 2] = v; }

    LaurentJet operator+(const LaurentJet& o) const {
        LaurentJet r;
        for (int i = 0; i < 5; ++i) r.c[i] = c[i] + o.c[i];
        return r;
    }
    LaurentJet operator*(const LaurentJet& o) const {
        LaurentJet r;
        for (int i = 0; i < 5; ++i) {
            if (c[i] == 0.0) continue;
            for (int j = 0; j < 5; ++j) {
                if (o.c[j] == 0.0) continue;
                int m = (i - 2) + (j - 2);
                if (m < -2) throw std::domain_error("laurent product: pole order > 2");
                if (m <= 2) r.c[m + 2] += c[i] * o.c[j];
            }
        }
        return r;
    }
    LaurentJet operator*(double s) const {
        LaurentJet r;
        for (int i = 0; i < 5; ++i) r.c[i] = c[i] * s;
        return r;
    }

    double res() const { return c[1]; }      // eps^{-1}
    double res2() const { return c[0]; }     // eps^{-2}
};

} // namespace sct
