// SPDX-License-Identifier: Apache-2.0
//
// prelog — capacity pre-log toolkit for correlated block-fading SIMO channels

#ifndef PRELOG_PRELOG_FORMULAS_HPP
#define PRELOG_PRELOG_FORMULAS_HPP

#include <optional>

namespace prelog {

// Closed-form capacity pre-logs for the correlated block-fading SIMO channel
// with block length n, correlation rank q and m receive antennas. Pre-logs
// are dimensionless; every logarithm in this toolkit is natural and
// information quantities are in nats.

/// Pre-log upper bound min(m * (1 - q/n), 1 - 1/n). Also the exact pre-log
/// whenever the correlation root satisfies Property (A).
double prelog_upper(int n, int q, int m);

/// Provable pre-log lower bound. With Property (A) it matches prelog_upper;
/// without it only the single-antenna value 1 - q/n is guaranteed, and
/// callers should flag that fallback as conservative.
double prelog_lower(int n, int q, int m, bool property_a_holds);

/// Single-antenna pre-log 1 - q/n.
double prelog_siso(int n, int q);

/// Smallest antenna count whose pre-log upper bound reaches the cap
/// 1 - 1/n: ceil((n-1) / (n-q)). Errors for q == n, where the pre-log is
/// zero no matter how many antennas are used.
int optimal_antennas(int n, int q);

/// The explicitly computable part of the chain-rule capacity upper bound,
/// per channel use: [m*(n-q)*log(1 + n*rho) + log log rho] / n. The bound's
/// additive O(1) constant is not computable and is excluded; consume this
/// only through slopes in log(rho). Requires rho > e so the double-log term
/// is defined and positive.
double part1_bound(double rho, int n, int q, int m);

/// Summary of the closed-form results for one (n, q, m) configuration.
struct PrelogReport {
    double upper = 0.0;
    double lower = 0.0;
    double siso = 0.0;
    bool coincide = false;             // lower == upper
    std::optional<int> optimal_m;      // absent when q == n
    bool lower_is_conservative = false; // true when the SISO fallback was used
};

PrelogReport make_prelog_report(int n, int q, int m, bool property_a_holds);

} // namespace prelog

#endif // PRELOG_PRELOG_FORMULAS_HPP
