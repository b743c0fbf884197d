#pragma once
#include "util/rational.hpp"
#include "util/laurent.hpp"
#include "core/profiles.hpp"

#include <complex>
#include <functional>
#include <vector>
#include <memory>
#include <string>

namespace sct::mellin {

// ---------- case classification and pole bookkeeping ----------

enum class Case { SimpleOdd, SimpleEven, IntegerOddLog, IntegerEven };
Case classify_case(int n, int k);
const char* case_name(Case c);

Rational z_min(int n, int k);   // n(k+1)/(2k)

struct PoleEntry {
    Rational z;    // p + (j0 + n(k+1) - 1)/(2k)
    int order;     // 2 at integers, 1 otherwise
    int p;
    int j0;
};

// all poles in [z_min, z_max], sorted; first entry is exactly z_min
std::vector<PoleEntry> pole_catalog(int n, int k, const Rational& z_max);

// linear factor a + b z with exact coefficients
struct LinearFactor {
    Rational a, b;
};

// b0(z) = (1-z) prod_{j=1}^{2k} (j - 2k z): the unweighted identity factor,
// derived from D (s-1)^{1-z} q^{2k(1-z)} = b0(z) (s-1)^{-z} q^{-2kz}.
std::vector<LinearFactor> b0_factors(int k);
// weighted factor with the polar weight q^{n(k+1)-1} commuted through:
// b(z) = (1-z) prod_{j=1}^{2k} (j - 2k z + n(k+1) - 1)
std::vector<LinearFactor> b_weighted_factors(int n, int k);
// B_l(z) = prod_{i=0}^{l-1} b(z - i)
std::vector<LinearFactor> Bl_factors(int n, int k, int l);

Rational eval_factors(const std::vector<LinearFactor>& f, const Rational& z);
std::complex<double> eval_factors(const std::vector<LinearFactor>& f,
                                  std::complex<double> z);
int root_multiplicity(const std::vector<LinearFactor>& f, const Rational& z);

// exact Laurent jet of 1/B_l at rational z0 (multiplicity 0, 1 or 2)
LaurentJet inv_Bl_jet(int n, int k, int l, const Rational& z0, int* mult = nullptr);

// ---------- closed-form identities of the paper (with quadrature twins) ----------

// E(n,alpha): 0 for even n; Gamma formula for odd n. Valid n/2 < alpha < n+1.
double E_closed(int n, double alpha);
// the defining integral int_1^inf (s-1)^{n-alpha} d^n/ds^n[(1+s)^{-alpha} s^{n-1}] ds
double E_numeric(int n, double alpha, double tol = 1e-12);

// int_1^inf d_s^p[(s+1)^{-p} s^{n-1}] ds = -(1/2^p) prod_{j=0}^{p-1}(n-2j), 1 < p, n < 2p
double s_identity(int p, int n);
double s_identity_numeric(int p, int n, double tol = 1e-12);

// a_{n,k} = int_0^1 |s-1|^{n - n(k+1)/2k} d^n/ds^n[(1+s)^{-n(k+1)/2k} s^{n-1}] ds
double a_nk(int n, int k, double tol = 1e-11);

// modified log-weighted constants; the '-' side log weight is taken as
// log(1-s^2) (the printed log(s^2+1) is inconsistent with d/dz |s^2-1|^{-z})
double a_tilde(char side, int p, int n, double tol = 1e-11);

// int_0^inf q^{2kl-1} d^{2kl}/dq^{2kl} b(s q^k, q) dq vs (2kl-1)! b(0,0)
struct QIdentityResult {
    double lhs;
    double rhs;
};
QIdentityResult q_identity_check(const Profile& u, const Profile& w, int k, int l,
                                 double s, double tol = 1e-10);

// vanishing mechanism int_0^inf d_x^beta (x^alpha f) dx for alpha + 1 > beta
double vanishing_identity_numeric(double alpha, int beta, const Profile& f,
                                  double tol = 1e-11);

// ---------- Mellin transforms ----------

// M(z) = int_0^inf t^{z-1} f(t) dt for rapidly decaying f; Re z > 0.
// [0,1] handled with the substitution t = u^{1/Re z}.
std::complex<double> mellin_transform(const std::function<double(double)>& f,
                                      std::complex<double> z, double tail_end,
                                      double tol = 1e-11);

// Time side of a model amplitude: evaluator of ahat plus its two Mellin sides.
class MellinSide {
public:
    virtual ~MellinSide() = default;
    virtual double ahat(double tau) const = 0;
    virtual double M(char side, double z) const = 0;       // side '+' or '-'
    virtual double dM(char side, double z) const;          // numeric by default
    virtual double tail_end() const = 0;                   // |ahat| negligible beyond
    virtual int moment_kill() const { return 0; }          // vanishing full moments
};

// ahat(tau) = He_M(tau) exp(-tau^2/2); closed-form Mellin on both sides.
class HermiteGaussSide : public MellinSide {
public:
    explicit HermiteGaussSide(int M);
    double ahat(double tau) const override;
    double M(char side, double z) const override;
    double dM(char side, double z) const override;
    double tail_end() const override { return 40.0; }
    int moment_kill() const override { return kill_; }

private:
    int kill_;
    std::vector<double> poly_;   // He_M coefficients in tau^j
};

// ---------- the residue engine ----------

// Separable model amplitude data b(r,q) = u(r) w(q); r is the quadratic
// variable of the phase, q the degree-2k one.
struct AmplitudeData {
    Profile u, w;
    std::shared_ptr<const MellinSide> time;
    double b00() const { return u(0.0) * w(0.0); }
};

struct ResidueResult {
    double c_power = 0.0;   // coefficient of lambda^{-z0}
    double c_log = 0.0;     // coefficient of lambda^{-z0} log(lambda)
};

struct SideLaurent {
    // Laurent data of the continued side functions T^{+-}(z) at the pole,
    // before multiplication by the Mellin factors M_{+-}(z).
    double plus_m2 = 0.0, plus_m1 = 0.0;
    double minus_m2 = 0.0, minus_m1 = 0.0;
};

// Laurent data of T^{+-} at a catalog pole using continuation depth l
// (l > p and, for the q-reduction, 2k(l-p) >= j0; any admissible l gives
// the same residues -- that is the l-independence check).
SideLaurent side_laurent(int n, int k, const PoleEntry& pole,
                         const AmplitudeData& amp, int l, double tol = 1e-11);

// assembled coefficients including the Mellin factors of the time profile
ResidueResult residue_coefficient(int n, int k, const PoleEntry& pole,
                                  const AmplitudeData& amp, int l,
                                  double tol = 1e-11);
// default depth: smallest admissible l for the pole
int default_depth(int n, int k, const PoleEntry& pole);

// residue machinery evaluated at a non-catalog rational point (used by the
// below-z_min checks; returns exactly zero when the rational limit vanishes)
ResidueResult residue_at_candidate(int n, int k, const Rational& z,
                                   const AmplitudeData& amp, int l,
                                   double tol = 1e-11);

// ---------- universal constants and the leading distribution ----------

struct UnitConstants {
    Case cs;
    Rational zmin;
    // <T_{n,k}, phi> = Cplus int_0^inf t^{zmin-1} phi(t) dt
    //                + Cminus int_0^inf t^{zmin-1} phi(-t) dt      (power branches)
    double Cplus = 0.0, Cminus = 0.0;
    // log branch: coefficient of -log(h) ... per side (equal for the odd case)
    double Clog_plus = 0.0, Clog_minus = 0.0;
};

// constants for a unit amplitude (b(0,0) = 1), certified against the oracle
// rather than against printed values
UnitConstants unit_constants(int n, int k, double tol = 1e-11);

// <T_{n,k}, phi> for the branch selected by classify_case; phi given with a
// far-field bound through `phi_tail_end`.
double leading_distribution(int n, int k, const std::function<double(double)>& phi,
                            double phi_tail_end, double tol = 1e-10);

} // namespace sct::mellin
