#include "ngq/cumulants.hpp"

#include <cmath>

#include "ngq/errors.hpp"
#include "ngq/special_functions.hpp"

namespace ngq {

namespace {

int table_index(int cap, int p, int q)
{
    if (p < 0 || q < 0 || p + q > cap)
        throw DomainError("moment/cumulant table: index outside the triangular range");
    return p * (cap + 1) + q;
}

double binomial(int n, int k)
{
    return std::round(std::exp(log_binomial(n, k)));
}

} // namespace

MomentTable::MomentTable(int order_cap, double s)
    : cap_(order_cap), s_(s), entries_((order_cap + 1) * (order_cap + 1), Complex(0.0, 0.0))
{
    if (order_cap < 0)
        throw DomainError("MomentTable: order cap must be non-negative");
    entries_[table_index(cap_, 0, 0)] = 1.0;
}

Complex MomentTable::at(int p, int q) const { return entries_[table_index(cap_, p, q)]; }
void MomentTable::set(int p, int q, Complex value) { entries_[table_index(cap_, p, q)] = value; }

CumulantTable::CumulantTable(int order_cap, double s)
    : cap_(order_cap), s_(s), entries_((order_cap + 1) * (order_cap + 1), Complex(0.0, 0.0))
{
    if (order_cap < 0)
        throw DomainError("CumulantTable: order cap must be non-negative");
}

Complex CumulantTable::at(int p, int q) const { return entries_[table_index(cap_, p, q)]; }
void CumulantTable::set(int p, int q, Complex value) { entries_[table_index(cap_, p, q)] = value; }

MomentTable s_ordered_moments(const FockDensityMatrix& rho, int order_cap, double s)
{
    if (order_cap < 0)
        throw DomainError("s_ordered_moments: order cap must be non-negative");
    if (!(s >= -1.0 && s <= 1.0))
        throw DomainError("s_ordered_moments: ordering parameter must lie in [-1, 1]");
    if (2 * order_cap > rho.cutoff())
        throw TruncationError("s_ordered_moments: order cap exceeds cutoff/2");

    // normalize by the truncated trace so entry (0,0) is exactly one
    const double tr = rho.trace();

    MomentTable table(order_cap, s);
    for (int p = 0; p <= order_cap; ++p) {
        for (int q = 0; p + q <= order_cap; ++q) {
            if (p == 0 && q == 0)
                continue;
            Complex total = 0.0;
            const double half = 0.5 * (1.0 - s);
            double coeff_s = 1.0; // ((1-s)/2)^k
            for (int k = 0; k <= std::min(p, q); ++k) {
                const double coeff = std::round(std::exp(log_factorial(k)))
                                   * binomial(p, k) * binomial(q, k);
                total += coeff * coeff_s * normal_moment(rho, p - k, q - k);
                coeff_s *= half;
            }
            table.set(p, q, total / tr);
        }
    }
    return table;
}

CumulantTable moments_to_cumulants(const MomentTable& table)
{
    const int cap = table.order_cap();
    CumulantTable gamma(cap, table.s());

    // graded recursion from d/dt1 M = M d/dt1 Gamma (or t2 when p = 0):
    //   gamma_{p,q} = m_{p,q} - sum_{0 < (k,l) <= (p,q)-e} C(p-e1,k) C(q-e2,l)
    //                 m_{k,l} gamma_{p-k,q-l}
    for (int order = 1; order <= cap; ++order) {
        for (int p = 0; p <= order; ++p) {
            const int q = order - p;
            const int rp = p >= 1 ? p - 1 : 0;
            const int rq = p >= 1 ? q : q - 1;
            Complex acc = table.at(p, q);
            for (int k = 0; k <= rp; ++k) {
                for (int l = 0; l <= rq; ++l) {
                    if (k == 0 && l == 0)
                        continue;
                    const double c = binomial(rp, k) * binomial(rq, l);
                    acc -= c * table.at(k, l) * gamma.at(p - k, q - l);
                }
            }
            gamma.set(p, q, acc);
        }
    }
    return gamma;
}

SInvarianceReport s_invariance_report(const FockDensityMatrix& rho, int order_cap)
{
    if (order_cap < 3)
        throw DomainError("s_invariance_report: order cap must be at least 3");

    const double orders[] = {-1.0, 0.0, 1.0};
    std::vector<CumulantTable> tables;
    tables.reserve(3);
    for (double s : orders)
        tables.push_back(moments_to_cumulants(s_ordered_moments(rho, order_cap, s)));

    SInvarianceReport report;
    for (int p = 0; p <= order_cap; ++p) {
        for (int q = 0; p + q <= order_cap; ++q) {
            if (p + q < 3)
                continue;
            for (int i = 1; i < 3; ++i)
                report.max_higher_order_deviation =
                    std::max(report.max_higher_order_deviation,
                             std::abs(tables[i].at(p, q) - tables[0].at(p, q)));
        }
    }

    for (int i = 0; i < 3; ++i) {
        for (int j = i + 1; j < 3; ++j) {
            const double expected_shift = 0.5 * (orders[j] - orders[i]);
            report.second_order_shift_deviation = std::max(
                report.second_order_shift_deviation,
                std::abs(tables[i].at(1, 1) - tables[j].at(1, 1) - expected_shift));
            report.second_order_shift_deviation = std::max(
                report.second_order_shift_deviation,
                std::abs(tables[i].at(2, 0) - tables[j].at(2, 0)));
        }
    }
    return report;
}

double cumulant_indicator(const FockDensityMatrix& rho, int order_cap)
{
    if (order_cap < 3)
        throw DomainError("cumulant_indicator: order cap must be at least 3");
    const CumulantTable gamma = moments_to_cumulants(s_ordered_moments(rho, order_cap, -1.0));
    double worst = 0.0;
    for (int p = 0; p <= order_cap; ++p)
        for (int q = 0; p + q <= order_cap; ++q)
            if (p + q >= 3)
                worst = std::max(worst, std::abs(gamma.at(p, q)));
    return worst;
}

} // namespace ngq
