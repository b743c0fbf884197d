#pragma once
#include <map>
#include <vector>
#include <cmath>
#include <cstdint>

namespace sct {

// Sparse multivariate polynomial with real coefficients, indexed by exponent
// vectors. Used for potentials (coefficient tables from the config) and for
// flow jets; sizes stay tiny so a std::map is fine.
class Poly {
public:
    using Key = std::vector<int>;

    Poly() : nvars_(0) {}
    explicit Poly(int nvars) : nvars_(nvars) {}

    static Poly variable(int nvars, int i) {
        Poly p(nvars);
        Key k(nvars, 0);
        k[i] = 1;
        p.terms_[k] = 1.0;
        return p;
    }
    static Poly constant(int nvars, double c) {
        Poly p(nvars);
        if (c != 0.0) p.terms_[Key(nvars, 0)] = c;
        return p;
    }

    int nvars() const { return nvars_; }
    const std::map<Key, double>& terms() const { return terms_; }

    void add_term(const Key& k, double c) {
        if (c == 0.0) return;
        auto it = terms_.find(k);
        if (it == terms_.end()) terms_[k] = c;
        else {
            it->second += c;
            if (it->second == 0.0) terms_.erase(it);
        }
    }

    Poly operator+(const Poly& o) const {
        Poly r = *this;
        for (auto& [k, c] : o.terms_) r.add_term(k, c);
        return r;
    }
    Poly operator-(const Poly& o) const {
        Poly r = *this;
        for (auto& [k, c] : o.terms_) r.add_term(k, -c);
        return r;
    }
    Poly operator*(double s) const {
        Poly r(nvars_);
        if (s == 0.0) return r;
        for (auto& [k, c] : terms_) r.terms_[k] = c * s;
        return r;
    }
    // product truncated at total degree maxdeg (maxdeg < 0: no truncation)
    Poly mul(const Poly& o, int maxdeg = -1) const {
        Poly r(nvars_);
        for (auto& [ka, ca] : terms_)
            for (auto& [kb, cb] : o.terms_) {
                Key k(nvars_);
                int deg = 0;
                for (int i = 0; i < nvars_; ++i) { k[i] = ka[i] + kb[i]; deg += k[i]; }
                if (maxdeg >= 0 && deg > maxdeg) continue;
                r.add_term(k, ca * cb);
            }
        return r;
    }

    double eval(const std::vector<double>& x) const {
        double v = 0.0;
        for (auto& [k, c] : terms_) {
            double t = c;
            for (int i = 0; i < nvars_; ++i)
                for (int e = 0; e < k[i]; ++e) t *= x[i];
            v += t;
        }
        return v;
    }

    Poly derivative(int i) const {
        Poly r(nvars_);
        for (auto& [k, c] : terms_) {
            if (k[i] == 0) continue;
            Key kk = k;
            kk[i] -= 1;
            r.add_term(kk, c * k[i]);
        }
        return r;
    }

    int total_degree() const {
        int d = 0;
        for (auto& [k, c] : terms_) {
            int t = 0;
            for (int e : k) t += e;
            if (t > d) d = t;
        }
        return d;
    }

    // substitute each variable by a polynomial in possibly different variables,
    // truncating at total degree maxdeg
    Poly compose(const std::vector<Poly>& sub, int maxdeg) const {
        int nv = sub.empty() ? 0 : sub[0].nvars();
        Poly r(nv);
        for (auto& [k, c] : terms_) {
            Poly t = Poly::constant(nv, c);
            for (int i = 0; i < nvars_; ++i)
                for (int e = 0; e < k[i]; ++e) t = t.mul(sub[i], maxdeg);
            r = r + t;
        }
        return r;
    }

    // keep only terms of exact total degree d
    Poly homogeneous_part(int d) const {
        Poly r(nvars_);
        for (auto& [k, c] : terms_) {
            int t = 0;
            for (int e : k) t += e;
            if (t == d) r.terms_[k] = c;
        }
        return r;
    }

    double max_abs_coeff() const {
        double m = 0.0;
        for (auto& [k, c] : terms_) m = std::max(m, std::fabs(c));
        return m;
    }

private:
    int nvars_;
    std::map<Key, double> terms_;
};

} // namespace sct
