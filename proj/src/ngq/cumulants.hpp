#pragma once

#include <vector>

#include "ngq/fock.hpp"

namespace ngq {

// Triangular table of <conj(alpha)^p alpha^q> moments of the s-ordered
// quasi-probability, indexed by (p, q) with p + q <= order_cap.
// Entry (0,0) is 1 and entry (q,p) is the conjugate of entry (p,q).
class MomentTable {
public:
    MomentTable(int order_cap, double s);

    int order_cap() const { return cap_; }
    double s() const { return s_; }
    Complex at(int p, int q) const;
    void set(int p, int q, Complex value);

private:
    int cap_;
    double s_;
    std::vector<Complex> entries_;
};

// Same index structure for cumulants gamma_{p,q}; entry (0,0) is 0.
class CumulantTable {
public:
    CumulantTable(int order_cap, double s);

    int order_cap() const { return cap_; }
    double s() const { return s_; }
    Complex at(int p, int q) const;
    void set(int p, int q, Complex value);

private:
    int cap_;
    double s_;
    std::vector<Complex> entries_;
};

// s-ordered operator moments <{adag^p a^q}_s> up to total order `order_cap`,
// obtained from exact normal-ordered moments through
//   sum_k k! C(p,k) C(q,k) ((1-s)/2)^k <adag^{p-k} a^{q-k}>.
// Requires order_cap <= cutoff / 2; s in [-1, 1].
MomentTable s_ordered_moments(const FockDensityMatrix& rho, int order_cap, double s);

// Graded bivariate moment-to-cumulant recursion (exact binomial weights).
CumulantTable moments_to_cumulants(const MomentTable& table);

struct SInvarianceReport {
    // max over s in {-1, 0, 1} and orders 3..K of |gamma(s) - gamma(-1)|
    double max_higher_order_deviation = 0.0;
    // deviation of the second-order entries from the (s2 - s1)/2 offset in
    // gamma_{1,1} (and no offset in gamma_{2,0}), the structure pinned by
    // the <a adag> - <adag a> = 1 commutator
    double second_order_shift_deviation = 0.0;
};

// Requires order_cap >= 3.
SInvarianceReport s_invariance_report(const FockDensityMatrix& rho, int order_cap);

// max |gamma_{p,q}| over 3 <= p+q <= order_cap, computed at s = -1.
double cumulant_indicator(const FockDensityMatrix& rho, int order_cap);

} // namespace ngq
