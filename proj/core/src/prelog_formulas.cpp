// SPDX-License-Identifier: Apache-2.0
//
// prelog — capacity pre-log toolkit for correlated block-fading SIMO channels

#include "prelog/prelog_formulas.hpp"

#include <algorithm>
#include <cmath>

#include "prelog/errors.hpp"

namespace prelog {

namespace {

void validate_nqm(int n, int q, int m) {
    if (n < 1 || q < 1 || q > n || m < 1) {
        throw ValidationError("pre-log formulas: need n >= 1, 1 <= q <= n, m >= 1");
    }
}

} // namespace

double prelog_upper(int n, int q, int m) {
    validate_nqm(n, q, m);
    const double nd = static_cast<double>(n);
    const double rank_term = static_cast<double>(m) * (1.0 - static_cast<double>(q) / nd);
    const double cap = 1.0 - 1.0 / nd;
    return std::min(rank_term, cap);
}

double prelog_siso(int n, int q) {
    validate_nqm(n, q, 1);
    return 1.0 - static_cast<double>(q) / static_cast<double>(n);
}

double prelog_lower(int n, int q, int m, bool property_a_holds) {
    validate_nqm(n, q, m);
    if (property_a_holds) {
        return prelog_upper(n, q, m);
    }
    return prelog_siso(n, q);
}

int optimal_antennas(int n, int q) {
    validate_nqm(n, q, 1);
    if (q == n) {
        throw ValidationError("pre-log is zero for all antenna counts");
    }
    return (n - 1 + (n - q) - 1) / (n - q); // ceil((n-1)/(n-q))
}

double part1_bound(double rho, int n, int q, int m) {
    validate_nqm(n, q, m);
    constexpr double kEuler = 2.718281828459045;
    if (!(rho > kEuler)) {
        throw ValidationError("part1_bound: rho must exceed e");
    }
    const double nd = static_cast<double>(n);
    const double main_term =
        static_cast<double>(m) * static_cast<double>(n - q) * std::log1p(nd * rho);
    return (main_term + std::log(std::log(rho))) / nd;
}

PrelogReport make_prelog_report(int n, int q, int m, bool property_a_holds) {
    PrelogReport report;
    report.upper = prelog_upper(n, q, m);
    report.lower = prelog_lower(n, q, m, property_a_holds);
    report.siso = prelog_siso(n, q);
    report.coincide = report.lower == report.upper;
    report.lower_is_conservative = !property_a_holds && report.lower < report.upper;
    if (q < n) {
        report.optimal_m = optimal_antennas(n, q);
    }
    return report;
}

} // namespace prelog
