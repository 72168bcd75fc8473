// SPDX-License-Identifier: Apache-2.0
//
// prelog — capacity pre-log toolkit for correlated block-fading SIMO channels

#ifndef PRELOG_PROPERTY_A_HPP
#define PRELOG_PROPERTY_A_HPP

#include <optional>
#include <vector>

#include "prelog/channel.hpp"

namespace prelog {

/// Result of a Property (A) certification run.
///
/// holds == true guarantees witness_k is present, has cardinality_k row
/// indices, and every Q-subset of those rows passed the rank test.
/// failures_examined counts all subset rank tests performed.
/// flagged_marginal_tests counts rank tests whose decisive singular-value
/// ratio landed within a factor 10 of the threshold; nonzero values mean
/// the verdict is numerically delicate.
struct PropertyAReport {
    bool holds = false;
    int cardinality_k = 0;
    std::optional<std::vector<int>> witness_k;
    long failures_examined = 0;
    long flagged_marginal_tests = 0;
};

/// Cap on the number of subset rank tests an exhaustive search may run.
struct SubsetBudget {
    long max_rank_tests = 1'000'000;
};

/// Size of the index set Property (A) asks for:
/// min(ceil((q*m - 1) / (m - 1)), n). Single-antenna systems have no such
/// condition, so m == 1 is an error.
int required_cardinality(int q, int m, int n);

/// Exhaustive Property (A) certification: searches index sets K of the
/// required cardinality in lexicographic order and accepts the first K all
/// of whose Q-row subsets have rank Q (relative singular-value threshold
/// rel_tol). Throws BudgetError when the test budget runs out.
PropertyAReport check_property_a(const CorrelationRoot &root, int m, double rel_tol = 1e-9,
                                 const SubsetBudget &budget = {});

/// The stronger condition: every Q x Q row submatrix of the root has full
/// rank. Implies Property (A) for every antenna count.
bool check_strong_condition(const CorrelationRoot &root, double rel_tol = 1e-9,
                            const SubsetBudget &budget = {});

} // namespace prelog

#endif // PRELOG_PROPERTY_A_HPP
